"""Axiomatic Kodaira-dimension classification of model geometries."""

from ._core import (
    BundleFactor,
    Catalog,
    CrosscheckFailure,
    CrosscheckReport,
    Decomposition,
    DominationOracle,
    DominationStatus,
    DominationVerdict,
    ExtKappa,
    Geometry,
    KappaEngine,
    KappaResult,
    ManifoldKappa,
    Obstruction,
    PieceTag,
    PreorderLevel,
    RuleMatch,
    VolumeClassifier,
    VolumeStatus,
    VolumeVerdict,
    bundle_kappa,
    bundle_volume_positive,
    volume_kappa_crosscheck,
)

__all__ = [
    "BundleFactor",
    "Catalog",
    "CrosscheckFailure",
    "CrosscheckReport",
    "Decomposition",
    "DominationOracle",
    "DominationStatus",
    "DominationVerdict",
    "ExtKappa",
    "Geometry",
    "KappaEngine",
    "KappaResult",
    "ManifoldKappa",
    "Obstruction",
    "PieceTag",
    "PreorderLevel",
    "RuleMatch",
    "VolumeClassifier",
    "VolumeStatus",
    "VolumeVerdict",
    "bundle_kappa",
    "bundle_volume_positive",
    "volume_kappa_crosscheck",
]
