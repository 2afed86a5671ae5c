"""Corpus counting and model serialisation.

Counting is pure tallying over grapheme keys: no smoothing, no pruning,
no normalisation.  Words are delimited by separator graphemes (spaces,
punctuation, digits) and padded with one boundary symbol per edge, so
edge transitions are first-class counts.  The model file is plain
sorted UTF-8 text and round-trips exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlignmentError, DataFormatError
from .ngram import BOUNDARY, NgramModel
from .script import ScriptInventory, cluster_graphemes, is_word_separator, normalize

# reserved token marking a word gap inside an aligned row, so a row can
# hold a whole sentence; real text never produces it as a grapheme
WORD_GAP = "_"

_MAGIC = "TLMODEL"
_VERSION = "v1"
_SECTIONS = ("unigram", "bigram", "trigram", "emission")
_KEY_ARITY = {"unigram": 1, "bigram": 2, "trigram": 3, "emission": 2}


@dataclass(frozen=True)
class AlignedPair:
    """Positionally aligned source graphemes and target units.

    Equal length is the caller's promise; the counters reject pairs
    that break it.
    """

    source_units: tuple[str, ...]
    target_units: tuple[str, ...]


def corpus_words(inventory: ScriptInventory, line: str) -> list[list[str]]:
    """Split a raw line into words of grapheme keys.

    Separator graphemes delimit words and are dropped; unlisted letters
    are kept and counted under their own keys.
    """
    words, current = [], []
    for g in cluster_graphemes(inventory, line):
        if is_word_separator(g):
            if current:
                words.append(current)
                current = []
        else:
            current.append(g.text)
    if current:
        words.append(current)
    return words


def count_ngrams(inventory: ScriptInventory, lines) -> NgramModel:
    """Unigram/bigram/trigram counts over a corpus of raw text lines.

    Each word is padded with one boundary symbol per edge before the
    bigram and trigram tallies; unigrams count only real characters.
    The result has no emission counts.
    """
    unigram, bigram, trigram = {}, {}, {}
    for line in lines:
        for word in corpus_words(inventory, line):
            for key in word:
                unigram[key] = unigram.get(key, 0) + 1
            padded = [BOUNDARY, *word, BOUNDARY]
            for a, b in zip(padded, padded[1:]):
                bigram[(a, b)] = bigram.get((a, b), 0) + 1
            for a, b, c in zip(padded, padded[1:], padded[2:]):
                trigram[(a, b, c)] = trigram.get((a, b, c), 0) + 1
    return NgramModel(unigram, bigram, trigram, {})


def count_emissions(pairs) -> dict:
    """(target, source) pair counts over aligned rows.

    Word-gap tokens are skipped; a length mismatch or a one-sided gap
    is rejected with the offending pair's index.
    """
    emission = {}
    for index, pair in enumerate(pairs):
        src, tgt = pair.source_units, pair.target_units
        if len(src) != len(tgt):
            raise AlignmentError(
                f"pair {index}: {len(src)} source units vs {len(tgt)} target units"
            )
        for pos, (c, b) in enumerate(zip(src, tgt)):
            if c == WORD_GAP or b == WORD_GAP:
                if c != b:
                    raise AlignmentError(
                        f"pair {index}: one-sided word gap at position {pos}"
                    )
                continue
            emission[(b, c)] = emission.get((b, c), 0) + 1
    return emission


def train_model(
    inventory: ScriptInventory,
    corpus_lines,
    aligned_pairs,
    *,
    add_one_smoothing: bool = False,
) -> NgramModel:
    """Count a text corpus and an aligned corpus into one model."""
    counts = count_ngrams(inventory, corpus_lines)
    emission = count_emissions(aligned_pairs)
    return NgramModel(
        counts.unigram,
        counts.bigram,
        counts.trigram,
        emission,
        add_one_smoothing=add_one_smoothing,
    )


def merge_models(first: NgramModel, second: NgramModel) -> NgramModel:
    """Entry-wise sum of two models' counts."""
    if first.boundary != second.boundary:
        raise ValueError("cannot merge models with different boundary symbols")

    def merged(a, b):
        out = dict(a)
        for key, count in b.items():
            out[key] = out.get(key, 0) + count
        return out

    return NgramModel(
        merged(first.unigram, second.unigram),
        merged(first.bigram, second.bigram),
        merged(first.trigram, second.trigram),
        merged(first.emission, second.emission),
        boundary=first.boundary,
        add_one_smoothing=first.add_one_smoothing,
    )


def parse_aligned_line(line: str):
    """One aligned row: source graphemes TAB target units, space-separated.

    Returns None for blank and comment lines.
    """
    if not line.strip() or line.lstrip().startswith("#"):
        return None
    parts = line.split("\t")
    if len(parts) < 2:
        raise DataFormatError("expected <source units>TAB<target units>")
    source = tuple(normalize(tok) for tok in parts[0].split() if tok)
    target = tuple(normalize(tok) for tok in parts[1].split() if tok)
    return AlignedPair(source, target)


def load_aligned(path) -> list[AlignedPair]:
    """Read an aligned corpus file, validating per-row alignment."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            try:
                pair = parse_aligned_line(raw.rstrip("\r\n"))
            except DataFormatError as err:
                raise DataFormatError(str(err), path=path, line=line_no) from None
            if pair is None:
                continue
            if len(pair.source_units) != len(pair.target_units):
                raise AlignmentError(
                    f"{len(pair.source_units)} source units vs "
                    f"{len(pair.target_units)} target units",
                    path=path,
                    line=line_no,
                )
            pairs.append(pair)
    return pairs


def save_model(model: NgramModel, path) -> None:
    """Write a model as sorted, section-headed UTF-8 text.

    Key parts are space-joined (counted keys never contain spaces), the
    count follows a tab.  Sorting makes the output byte-deterministic
    for identical counts.
    """
    lines = [
        f"{_MAGIC} {_VERSION} boundary={model.boundary}",
        "sections "
        + " ".join(
            f"{name}={len(getattr(model, name))}" for name in _SECTIONS
        ),
    ]
    for name in _SECTIONS:
        counts = getattr(model, name)
        lines.append(f"[{name}]")
        for key in sorted(counts):
            flat = key if isinstance(key, str) else " ".join(key)
            lines.append(f"{flat}\t{counts[key]}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_model(path, *, add_one_smoothing: bool = False) -> NgramModel:
    """Read a model file back, validating header and section sizes."""
    with open(path, encoding="utf-8") as fh:
        raw_lines = fh.read().splitlines()
    if not raw_lines:
        raise DataFormatError("empty model file", path=path)
    header = raw_lines[0].split(" ")
    if len(header) != 3 or header[0] != _MAGIC:
        raise DataFormatError("not a model file (bad magic)", path=path, line=1)
    if header[1] != _VERSION:
        raise DataFormatError(
            f"unsupported model version {header[1]!r}", path=path, line=1
        )
    if not header[2].startswith("boundary=") or len(header[2]) <= len("boundary="):
        raise DataFormatError("missing boundary symbol", path=path, line=1)
    boundary = header[2][len("boundary="):]
    if len(raw_lines) < 2 or not raw_lines[1].startswith("sections "):
        raise DataFormatError("missing sections line", path=path, line=2)
    declared = {}
    for token in raw_lines[1].split(" ")[1:]:
        name, _, size = token.partition("=")
        if name not in _SECTIONS or not size.isdigit():
            raise DataFormatError(
                f"bad sections token {token!r}", path=path, line=2
            )
        declared[name] = int(size)
    if set(declared) != set(_SECTIONS):
        raise DataFormatError("sections line must declare all four sections",
                              path=path, line=2)

    sections = {name: {} for name in _SECTIONS}
    current = None
    for line_no, line in enumerate(raw_lines[2:], 3):
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1]
            if name not in _SECTIONS:
                raise DataFormatError(
                    f"unknown section {name!r}", path=path, line=line_no
                )
            current = name
            continue
        if current is None:
            raise DataFormatError("counts before any section header",
                                  path=path, line=line_no)
        key_part, tab, count_part = line.partition("\t")
        if not tab:
            raise DataFormatError("expected <key>TAB<count>", path=path, line=line_no)
        try:
            count = int(count_part)
        except ValueError:
            raise DataFormatError(
                f"non-integer count {count_part!r}", path=path, line=line_no
            ) from None
        if count < 0:
            raise DataFormatError(f"negative count {count}", path=path, line=line_no)
        parts = key_part.split(" ")
        if len(parts) != _KEY_ARITY[current]:
            raise DataFormatError(
                f"{current} key needs {_KEY_ARITY[current]} part(s), got {len(parts)}",
                path=path,
                line=line_no,
            )
        key = parts[0] if _KEY_ARITY[current] == 1 else tuple(parts)
        if key in sections[current]:
            raise DataFormatError(f"duplicate key {key_part!r}", path=path, line=line_no)
        sections[current][key] = count

    for name in _SECTIONS:
        if len(sections[name]) != declared[name]:
            raise DataFormatError(
                f"section {name!r} declares {declared[name]} entries "
                f"but holds {len(sections[name])} (truncated or corrupt file)",
                path=path,
            )
    return NgramModel(
        sections["unigram"],
        sections["bigram"],
        sections["trigram"],
        sections["emission"],
        boundary=boundary,
        add_one_smoothing=add_one_smoothing,
    )
