#!/usr/bin/env python3
"""
Configuration Module - Centralized configuration for the GCA workbench

Loads and validates all configuration from environment variables (and a
local .env file when present).
"""

import os
from typing import Optional, List
from dataclasses import dataclass, field
from dotenv import load_dotenv

load_dotenv()

BACKENDS = ("exact", "float")


@dataclass
class ScalarConfig:
    """Scalar arithmetic configuration."""
    backend: Optional[str] = None  # GCA_BACKEND: exact or float, overrides --backend when set
    float_tolerance: float = 1e-9
    embed_precision: int = 96  # bits used for numerical embeddings

    def is_valid(self) -> bool:
        return self.backend in BACKENDS + (None,) and self.float_tolerance > 0 and self.embed_precision >= 53


@dataclass
class RepConfig:
    """Matrix representation (numerical oracle) configuration."""
    max_dim: int = 4096
    build_tolerance: float = 1e-12
    oracle_tolerance: float = 1e-9

    def is_valid(self) -> bool:
        return self.max_dim >= 2 and self.build_tolerance > 0 and self.oracle_tolerance > 0


@dataclass
class DiagramConfig:
    """Geometry constants for SVG/TikZ rendering."""
    strand_pitch: float = 30.0
    row_height: float = 40.0
    margin: float = 20.0
    stroke_width: float = 2.0
    tikz_unit: float = 0.5  # cm per SVG strand pitch

    def is_valid(self) -> bool:
        return self.strand_pitch > 0 and self.row_height > 0 and self.margin >= 0 and self.tikz_unit > 0


@dataclass
class VerifyConfig:
    """Verification run configuration."""
    workers: int = 1
    seed: int = 20240101
    random_words: int = 100
    random_elements: int = 100

    def is_valid(self) -> bool:
        return self.workers >= 1 and self.random_words >= 0 and self.random_elements >= 0


@dataclass
class Config:
    """Main configuration container."""
    scalar: ScalarConfig = field(default_factory=ScalarConfig)
    rep: RepConfig = field(default_factory=RepConfig)
    diagram: DiagramConfig = field(default_factory=DiagramConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)


def load_config() -> Config:
    """
    Load configuration from environment variables.

    Returns:
        Config object with all settings
    """
    config = Config()

    # Scalars
    config.scalar.backend = os.getenv("GCA_BACKEND", "").strip().lower() or None
    config.scalar.float_tolerance = float(os.getenv("GCA_FLOAT_TOLERANCE", "1e-9"))
    config.scalar.embed_precision = int(os.getenv("GCA_EMBED_PRECISION", "96"))

    # Representation
    config.rep.max_dim = int(os.getenv("GCA_REP_MAX_DIM", "4096"))
    config.rep.build_tolerance = float(os.getenv("GCA_REP_TOLERANCE", "1e-12"))
    config.rep.oracle_tolerance = float(os.getenv("GCA_ORACLE_TOLERANCE", "1e-9"))

    # Diagrams
    config.diagram.strand_pitch = float(os.getenv("GCA_STRAND_PITCH", "30"))
    config.diagram.row_height = float(os.getenv("GCA_ROW_HEIGHT", "40"))
    config.diagram.margin = float(os.getenv("GCA_DIAGRAM_MARGIN", "20"))
    config.diagram.stroke_width = float(os.getenv("GCA_STROKE_WIDTH", "2"))
    config.diagram.tikz_unit = float(os.getenv("GCA_TIKZ_UNIT", "0.5"))

    # Verification
    config.verify.workers = int(os.getenv("GCA_WORKERS", "1"))
    config.verify.seed = int(os.getenv("GCA_SEED", "20240101"))
    config.verify.random_words = int(os.getenv("GCA_RANDOM_WORDS", "100"))
    config.verify.random_elements = int(os.getenv("GCA_RANDOM_ELEMENTS", "100"))

    return config


def backend_override() -> Optional[str]:
    """Backend forced by the environment, if any (GCA_BACKEND beats --backend)."""
    return get_config().scalar.backend


def validate_config(config: Config) -> List[str]:
    """
    Validate configuration and return list of errors.

    Args:
        config: Config object to validate

    Returns:
        List of error messages (empty if valid)
    """
    errors = []

    if not config.scalar.is_valid():
        errors.append(f"Scalar config invalid (GCA_BACKEND must be one of {', '.join(BACKENDS)})")
    if not config.rep.is_valid():
        errors.append("Representation config invalid (GCA_REP_MAX_DIM, tolerances must be positive)")
    if not config.diagram.is_valid():
        errors.append("Diagram geometry invalid (pitch and row height must be positive)")
    if not config.verify.is_valid():
        errors.append("GCA_WORKERS must be at least 1 and GCA_RANDOM_* counts non-negative")

    return errors


def print_config_status(config: Config):
    """Print configuration status for debugging."""
    print("Configuration Status")
    print("=" * 50)

    print(f"\nScalars:")
    print(f"  Backend: {config.scalar.backend or 'from --backend (default exact)'}")
    print(f"  Float Tolerance: {config.scalar.float_tolerance:g}")
    print(f"  Embed Precision: {config.scalar.embed_precision} bits")
    print(f"  Status: {'OK' if config.scalar.is_valid() else 'INVALID'}")

    print(f"\nRepresentation:")
    print(f"  Max Dimension: {config.rep.max_dim}")
    print(f"  Build Tolerance: {config.rep.build_tolerance:g}")
    print(f"  Oracle Tolerance: {config.rep.oracle_tolerance:g}")
    print(f"  Status: {'OK' if config.rep.is_valid() else 'INVALID'}")

    print(f"\nDiagrams:")
    print(f"  Strand Pitch: {config.diagram.strand_pitch:g}")
    print(f"  Row Height: {config.diagram.row_height:g}")
    print(f"  TikZ Unit: {config.diagram.tikz_unit:g} cm")
    print(f"  Status: {'OK' if config.diagram.is_valid() else 'INVALID'}")

    print(f"\nVerification:")
    print(f"  Workers: {config.verify.workers}")
    print(f"  Seed: {config.verify.seed}")
    print(f"  Random Words / Elements: {config.verify.random_words} / {config.verify.random_elements}")
    print(f"  Status: {'OK' if config.verify.is_valid() else 'INVALID'}")


# Global config instance
_config: Optional[Config] = None


def get_config() -> Config:
    """
    Get the global configuration instance.

    Returns:
        Config object (loaded on first call)
    """
    global _config
    if _config is None:
        _config = load_config()
    return _config
