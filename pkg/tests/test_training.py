import random

import pytest

import reference
from sindhi_translit.errors import AlignmentError, DataFormatError
from sindhi_translit.ngram import BOUNDARY, NgramModel
from sindhi_translit.training import (
    AlignedPair,
    corpus_words,
    count_emissions,
    count_ngrams,
    load_aligned,
    load_model,
    merge_models,
    parse_aligned_line,
    save_model,
    train_model,
)


def test_corpus_words_basic(toy_inventory):
    assert corpus_words(toy_inventory, "अब अच") == [["अ", "ब"], ["अ", "च"]]


def test_corpus_words_punctuation_and_digits(toy_inventory):
    assert corpus_words(toy_inventory, "अब, अच7ब") == [
        ["अ", "ब"],
        ["अ", "च"],
        ["ब"],
    ]


def test_corpus_words_unlisted_letter_is_a_token(toy_inventory):
    assert corpus_words(toy_inventory, "अxब") == [["अ", "x", "ब"]]


def test_count_single_word(toy_inventory):
    model = count_ngrams(toy_inventory, ["अब"])
    assert model.unigram == {"अ": 1, "ब": 1}
    assert model.bigram == {
        (BOUNDARY, "अ"): 1,
        ("अ", "ब"): 1,
        ("ब", BOUNDARY): 1,
    }
    assert model.trigram == {
        (BOUNDARY, "अ", "ब"): 1,
        ("अ", "ब", BOUNDARY): 1,
    }
    assert model.emission == {}


def test_count_empty_corpus(toy_inventory):
    model = count_ngrams(toy_inventory, [])
    assert model.unigram == {} and model.bigram == {} and model.trigram == {}


def test_space_splits_words_no_cross_bigram(toy_inventory):
    model = count_ngrams(toy_inventory, ["अ अ"])
    assert model.unigram == {"अ": 2}
    assert model.bigram == {(BOUNDARY, "अ"): 2, ("अ", BOUNDARY): 2}
    assert ("अ", "अ") not in model.bigram


def test_single_letter_word_trigram(toy_inventory):
    model = count_ngrams(toy_inventory, ["अ"])
    assert model.trigram == {(BOUNDARY, "अ", BOUNDARY): 1}


def test_boundary_never_a_unigram(toy_inventory):
    model = count_ngrams(toy_inventory, ["अब अच", "ब ब"])
    assert BOUNDARY not in model.unigram


def test_counts_ignore_line_split(toy_inventory):
    one = count_ngrams(toy_inventory, ["अब अच"])
    two = count_ngrams(toy_inventory, ["अब", "अच"])
    assert one == two


def test_counts_permutation_invariant(toy_inventory):
    lines = ["अब अच", "चब", "अ बच अब"]
    rng = random.Random(5)
    for _ in range(5):
        shuffled = lines[:]
        rng.shuffle(shuffled)
        assert count_ngrams(toy_inventory, shuffled) == count_ngrams(
            toy_inventory, lines
        )


def test_bigram_marginal_matches_unigram(toy_inventory):
    model = count_ngrams(toy_inventory, ["अबच अब", "चब बच अ"])
    for key, count in model.unigram.items():
        out = sum(n for (a, _b), n in model.bigram.items() if a == key)
        assert out == count  # every token has exactly one successor
    for a, _b in model.bigram:
        assert a == BOUNDARY or a in model.unigram


def test_count_ngrams_agrees_with_reference(toy_inventory):
    rng = random.Random(23)
    alphabet = ["अ", "ब", "च", "क"]
    for _ in range(30):
        words = [
            [rng.choice(alphabet) for _ in range(rng.randrange(1, 5))]
            for _ in range(rng.randrange(1, 8))
        ]
        model = count_ngrams(toy_inventory, [" ".join("".join(w) for w in words)])
        for a in alphabet:
            assert model.unigram.get(a, 0) == reference.unigram_count(words, a)
            for b in alphabet + [BOUNDARY]:
                assert model.bigram.get((a, b), 0) == reference.bigram_count(
                    words, a, b
                )
        assert model.context_count(BOUNDARY) == len(words)


def test_count_emissions_basic():
    pairs = [
        AlignedPair(("क", "ा"), ("K", "AA")),
        AlignedPair(("क",), ("K",)),
    ]
    assert count_emissions(pairs) == {("K", "क"): 2, ("AA", "ा"): 1}


def test_count_emissions_skips_word_gaps():
    pairs = [AlignedPair(("क", "_", "ख"), ("K", "_", "X"))]
    assert count_emissions(pairs) == {("K", "क"): 1, ("X", "ख"): 1}


def test_count_emissions_length_mismatch():
    pairs = [
        AlignedPair(("क",), ("K",)),
        AlignedPair(("क", "ख"), ("K",)),
    ]
    with pytest.raises(AlignmentError) as excinfo:
        count_emissions(pairs)
    assert "2" in str(excinfo.value)  # the offending pair is named


def test_count_emissions_one_sided_gap():
    pairs = [AlignedPair(("क", "_"), ("K", "X"))]
    with pytest.raises(AlignmentError):
        count_emissions(pairs)


def test_count_emissions_agrees_with_reference():
    rng = random.Random(31)
    sources = ["क", "ख", "ग"]
    targets = ["A", "B"]
    pairs = []
    for _ in range(50):
        n = rng.randrange(1, 6)
        src = tuple(rng.choice(sources) for _ in range(n))
        tgt = tuple(rng.choice(targets) for _ in range(n))
        pairs.append(AlignedPair(src, tgt))
    got = count_emissions(pairs)
    raw = [(p.source_units, p.target_units) for p in pairs]
    for t in targets:
        for s in sources:
            assert got.get((t, s), 0) == reference.emission_count(raw, t, s)


def test_merge_equals_joint_count(toy_inventory):
    first = ["अब अच", "चब"]
    second = ["बच अ"]
    merged = merge_models(
        count_ngrams(toy_inventory, first), count_ngrams(toy_inventory, second)
    )
    assert merged == count_ngrams(toy_inventory, first + second)


def test_parse_aligned_line():
    assert parse_aligned_line("# comment") is None
    assert parse_aligned_line("") is None
    pair = parse_aligned_line("क ा\tK AA")
    assert pair == AlignedPair(("क", "ा"), ("K", "AA"))


def test_load_aligned(tmp_path):
    path = tmp_path / "aligned.tsv"
    path.write_text("# head\nक\tK\nक ख _ ग\tK X _ G\n", encoding="utf-8")
    pairs = load_aligned(path)
    assert len(pairs) == 2
    assert pairs[1].source_units == ("क", "ख", "_", "ग")


def test_load_aligned_rejects_mismatch(tmp_path):
    path = tmp_path / "aligned.tsv"
    path.write_text("क ख\tK\n", encoding="utf-8")
    with pytest.raises(DataFormatError) as excinfo:
        load_aligned(path)
    assert "1" in str(excinfo.value)


def test_load_aligned_rejects_missing_tab(tmp_path):
    path = tmp_path / "aligned.tsv"
    path.write_text("क ख K X\n", encoding="utf-8")
    with pytest.raises(DataFormatError):
        load_aligned(path)


# ---------------------------------------------------------------------
# model file round-trips


def test_save_load_roundtrip(demo_model, tmp_path):
    path = tmp_path / "model.tsv"
    save_model(demo_model, path)
    assert load_model(path) == demo_model


def test_save_is_deterministic(demo_model, tmp_path):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    save_model(demo_model, a)
    save_model(demo_model, b)
    assert a.read_bytes() == b.read_bytes()


def test_model_file_shape(demo_model, tmp_path):
    path = tmp_path / "model.tsv"
    save_model(demo_model, path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "TLMODEL v1 boundary=⊥"
    assert lines[1].startswith("sections unigram=")
    assert "[unigram]" in lines and "[emission]" in lines


def test_load_rejects_bad_magic(tmp_path):
    path = tmp_path / "model.tsv"
    path.write_text("NOTAMODEL v1 boundary=⊥\n", encoding="utf-8")
    with pytest.raises(DataFormatError):
        load_model(path)


def test_load_rejects_wrong_version(tmp_path):
    path = tmp_path / "model.tsv"
    path.write_text(
        "TLMODEL v2 boundary=⊥\n"
        "sections unigram=0 bigram=0 trigram=0 emission=0\n",
        encoding="utf-8",
    )
    with pytest.raises(DataFormatError):
        load_model(path)


def test_load_rejects_truncated_section(demo_model, tmp_path):
    path = tmp_path / "model.tsv"
    save_model(demo_model, path)
    lines = path.read_text(encoding="utf-8").splitlines()
    path.write_text("\n".join(lines[:-1]) + "\n", encoding="utf-8")
    with pytest.raises(DataFormatError):
        load_model(path)


def test_load_rejects_non_integer_count(tmp_path):
    path = tmp_path / "model.tsv"
    path.write_text(
        "TLMODEL v1 boundary=⊥\n"
        "sections unigram=1 bigram=0 trigram=0 emission=0\n"
        "[unigram]\n"
        "क\tmany\n"
        "[bigram]\n[trigram]\n[emission]\n",
        encoding="utf-8",
    )
    with pytest.raises(DataFormatError) as excinfo:
        load_model(path)
    assert "4" in str(excinfo.value)


def test_load_rejects_wrong_key_arity(tmp_path):
    path = tmp_path / "model.tsv"
    path.write_text(
        "TLMODEL v1 boundary=⊥\n"
        "sections unigram=0 bigram=1 trigram=0 emission=0\n"
        "[unigram]\n"
        "[bigram]\n"
        "क\t3\n"
        "[trigram]\n[emission]\n",
        encoding="utf-8",
    )
    with pytest.raises(DataFormatError):
        load_model(path)


def test_load_rejects_duplicate_key(tmp_path):
    path = tmp_path / "model.tsv"
    path.write_text(
        "TLMODEL v1 boundary=⊥\n"
        "sections unigram=2 bigram=0 trigram=0 emission=0\n"
        "[unigram]\n"
        "क\t1\nक\t2\n"
        "[bigram]\n[trigram]\n[emission]\n",
        encoding="utf-8",
    )
    with pytest.raises(DataFormatError):
        load_model(path)


def test_load_rejects_size_mismatch(tmp_path):
    path = tmp_path / "model.tsv"
    path.write_text(
        "TLMODEL v1 boundary=⊥\n"
        "sections unigram=2 bigram=0 trigram=0 emission=0\n"
        "[unigram]\n"
        "क\t1\n"
        "[bigram]\n[trigram]\n[emission]\n",
        encoding="utf-8",
    )
    with pytest.raises(DataFormatError):
        load_model(path)


def test_large_synthetic_roundtrip(tmp_path):
    # a quarter of a million entries per section; keys never collide
    n = 250_000
    model = NgramModel(
        unigram={f"u{i}": i % 97 for i in range(n)},
        bigram={(f"a{i}", f"b{i}"): i % 89 for i in range(n)},
        trigram={(f"a{i}", f"b{i}", f"c{i}"): i % 83 for i in range(n)},
        emission={(f"t{i}", f"s{i}"): i % 79 for i in range(n)},
    )
    path = tmp_path / "big.tsv"
    save_model(model, path)
    assert load_model(path) == model


def test_train_model_combines_counts(toy_inventory):
    pairs = [AlignedPair(("अ", "ब"), ("A", "B"))]
    model = train_model(toy_inventory, ["अब"], pairs)
    assert model.unigram == {"अ": 1, "ब": 1}
    assert model.emission == {("A", "अ"): 1, ("B", "ब"): 1}
