"""Locations of the data files shipped inside the package."""

from __future__ import annotations

from importlib import resources


def _data(*parts) -> str:
    return str(resources.files(__package__).joinpath("data", *parts))


def inventory_path() -> str:
    """Default Sindhi-Devanagari inventory (43 C / 11 V / 12 M)."""
    return _data("sd-dev_inventory.tsv")


def mapping_path() -> str:
    """Default Devanagari to Perso-Arabic mapping table."""
    return _data("sd-dev_to_sd-arab.tsv")


def demo_corpus_path() -> str:
    """Small Devanagari training corpus used by the demos."""
    return _data("demo", "corpus.txt")


def demo_aligned_path() -> str:
    """Aligned word pairs matching the demo corpus."""
    return _data("demo", "aligned.tsv")


def demo_gold_path() -> str:
    """Aligned gold sentences for the evaluation demo."""
    return _data("demo", "gold.tsv")


def demo_sample_path() -> str:
    """Fifty lines of demo input text."""
    return _data("demo", "sample_input.txt")
