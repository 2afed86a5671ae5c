from pathlib import Path

import pytest

from sindhi_translit import data as shipped
from sindhi_translit.mapping import load_mapping
from sindhi_translit.script import ScriptInventory, load_inventory
from sindhi_translit.training import load_aligned, train_model


@pytest.fixture(scope="session")
def inventory():
    return load_inventory(shipped.inventory_path())


@pytest.fixture(scope="session")
def table():
    return load_mapping(shipped.mapping_path())


@pytest.fixture(scope="session")
def demo_model(inventory):
    corpus = Path(shipped.demo_corpus_path()).read_text(encoding="utf-8").splitlines()
    pairs = load_aligned(shipped.demo_aligned_path())
    return train_model(inventory, corpus, pairs)


@pytest.fixture(scope="session")
def demo_model_path(demo_model, tmp_path_factory):
    from sindhi_translit.training import save_model

    path = tmp_path_factory.mktemp("model") / "demo.tsv"
    save_model(demo_model, path)
    return path


@pytest.fixture()
def toy_inventory():
    # class assignment only has to be internally consistent for these tests
    return ScriptInventory(
        consonants={"ब", "च", "क", "म", "ल", "ख", "ग", "द", "न"},
        independent_vowels={"अ", "इ"},
        vowel_symbols={"ा", "ि"},
    )
