"""
Services layer for the theta lifting toolkit.

This module contains the verification orchestrator that runs the
registered checks for a discriminant and assembles the report.
"""

from services.verification_orchestrator import (
    CheckRecord,
    CheckStatus,
    VerificationOrchestrator,
    VerificationRun,
    verify_discriminant,
)

__all__ = [
    # Main orchestrator
    "VerificationOrchestrator",
    # Run tracking
    "CheckRecord",
    "CheckStatus",
    "VerificationRun",
    # Convenience functions
    "verify_discriminant",
]
