"""Grayscale image cipher built on the logistic map and DNA rule encoding."""
from .cipher import CipherConfig, CipherEnvelope, Mode, decrypt, encrypt, generate_key_image, preprocess
from .keys import Key128, Role, SeedSpec, fold_window, parse_key, seed_to_initial

__all__ = [
    "CipherConfig",
    "CipherEnvelope",
    "Key128",
    "Mode",
    "Role",
    "SeedSpec",
    "decrypt",
    "encrypt",
    "fold_window",
    "generate_key_image",
    "parse_key",
    "preprocess",
    "seed_to_initial",
]
