"""
Binary quadratic forms and the class group.

Submodules:
    - cyclotomic: Exact arithmetic in Q(zeta_m)
    - forms: Forms, reduction, Gauss composition, CM points
    - group: The class group, its structure and genus theory
    - characters: Characters with exact root-of-unity values
"""

from thetalift.classgroup.characters import (
    ClassCharacter,
    character_from_index,
    characters,
    conjugation_representatives,
    orthogonality_sum,
    square_representatives,
    square_roots,
)
from thetalift.classgroup.cyclotomic import CyclotomicNumber
from thetalift.classgroup.forms import (
    CMPoint,
    QuadForm,
    cm_point,
    compose,
    enumerate_reduced,
    principal_form,
    reduce,
    reduce_form,
    solve_linmod,
)
from thetalift.classgroup.group import (
    ClassGroup,
    GenusData,
    class_action,
    class_group,
    coprime_representative,
    genus_data,
    genus_of,
    group_structure,
)

__all__ = [
    # Exact arithmetic
    "CyclotomicNumber",
    # Forms
    "CMPoint",
    "QuadForm",
    "cm_point",
    "compose",
    "enumerate_reduced",
    "principal_form",
    "reduce",
    "reduce_form",
    "solve_linmod",
    # Group
    "ClassGroup",
    "GenusData",
    "class_action",
    "class_group",
    "coprime_representative",
    "genus_data",
    "genus_of",
    "group_structure",
    # Characters
    "ClassCharacter",
    "character_from_index",
    "characters",
    "conjugation_representatives",
    "orthogonality_sum",
    "square_representatives",
    "square_roots",
]
