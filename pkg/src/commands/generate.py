"""
Generate command.

Implements `outerproj generate dual-cyclic`: build the embedded dual cyclic
instance for a dimension and facet count and write it as an instance file.
The construction has no randomness, so the file is reproducible byte for byte.
"""

import logging
from pathlib import Path

from constants import EXIT_OK, GENERATOR_KINDS
from core.cyclicgen import count_dual_cyclic_vertices, dual_cyclic_instance
from core.exceptions import ValidationException
from core.persistence import save_instance

logger = logging.getLogger(__name__)


def generate_cmd(kind: str, dimension: int, facets: int, output_path: Path) -> int:
    """
    Write a generated instance.

    Raises:
        ValidationException: If ``kind`` is unknown
        InvalidSpec: If (dimension, facets) is not a valid dual cyclic spec
    """
    if kind not in GENERATOR_KINDS:
        raise ValidationException(f"unknown generator {kind!r}, expected one of {', '.join(GENERATOR_KINDS)}", "kind")

    expected = count_dual_cyclic_vertices(dimension, facets)
    logger.info(f"Generating dual cyclic ({dimension},{facets}) instance with {expected} outcome vertices")
    instance = dual_cyclic_instance(dimension, facets)
    save_instance(instance, output_path)
    logger.info(f"Wrote instance with p={instance.p}, n={instance.n}, m={instance.m} to {output_path}")
    return EXIT_OK
