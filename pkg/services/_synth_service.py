"""
services/_synth_service.py

This module defines the service that generates synthetic instances and stores
their matrices.

Classes:
    - SynthService: Generates a synthetic instance and saves Y, X and S.
"""

from pathlib import Path
from typing import Dict

from loguru import logger

from algorithms import generate_instance, snr_of
from models import SynthInstance, SynthSpec
from repositories import MatrixRepo


class SynthService:
    """
    Generates synthetic low-rank plus sparse instances.

    Attributes:
        repo (MatrixRepo): Destination of the generated matrices.
    """

    def __init__(self, repository: MatrixRepo):
        self.repo = repository

    def generate(self, spec: SynthSpec) -> SynthInstance:
        instance = generate_instance(spec)
        logger.bind(
            payload={
                "rank": spec.rank,
                "support_fraction": float(instance.support.mean()),
                "realized_snr": snr_of(instance.x_true, instance.s_true, db=spec.db)
                if instance.s_true.any()
                else None,
            }
        ).info(f"Generated {spec.m}x{spec.n} instance (seed {spec.seed})")
        return instance

    def save(self, instance: SynthInstance, prefix: str) -> Dict[str, Path]:
        """
        Write `<prefix>_Y`, `<prefix>_X` and `<prefix>_S`.

        Returns:
            Dict[str, Path]: Written file per matrix label.
        """
        return {
            "Y": self.repo.create(f"{prefix}_Y", instance.y),
            "X": self.repo.create(f"{prefix}_X", instance.x_true),
            "S": self.repo.create(f"{prefix}_S", instance.s_true),
        }
