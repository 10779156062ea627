"""
Serialization of results.

Submodules:
    - models: Pydantic models of the JSON documents
    - exporters: Export configuration, the JSON exporter, converters and readers
"""

from thetalift.io.exporters import (
    ExportConfig,
    Exporter,
    JsonExporter,
    class_group_model,
    decode_coefficient,
    encode_coefficient,
    load_model,
    petersson_model,
    qexpansion_model,
    read_qexpansion,
    read_vv_form,
    theta_space_model,
    vv_form_model,
)
from thetalift.io.models import (
    CharacterModel,
    CheckResultModel,
    ClassGroupModel,
    CyclotomicModel,
    PairingComparisonModel,
    PeterssonValueModel,
    QExpansionModel,
    ThetaSpaceModel,
    VectorValuedFormModel,
    VerificationReportModel,
)

__all__ = [
    # Models
    "CharacterModel",
    "CheckResultModel",
    "ClassGroupModel",
    "CyclotomicModel",
    "PairingComparisonModel",
    "PeterssonValueModel",
    "QExpansionModel",
    "ThetaSpaceModel",
    "VectorValuedFormModel",
    "VerificationReportModel",
    # Export
    "ExportConfig",
    "Exporter",
    "JsonExporter",
    # Converters
    "class_group_model",
    "petersson_model",
    "qexpansion_model",
    "theta_space_model",
    "vv_form_model",
    # Readers
    "decode_coefficient",
    "encode_coefficient",
    "load_model",
    "read_qexpansion",
    "read_vv_form",
]
