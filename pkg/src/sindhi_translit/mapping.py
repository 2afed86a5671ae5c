"""Rule base: per-grapheme candidate mappings into the target script.

The table is loaded from a tab-separated file, one grapheme per row with
one or more target candidates.  A single candidate is a hard rule; two
or more mark the grapheme as ambiguous and leave the choice to the
statistical layer.  Candidate order matters: the first entry is the
deterministic fallback when statistics cannot decide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import DataFormatError, UnmappedGraphemeError
from .phonemes import Phoneme, PhonemePattern
from .script import VIRAMA, CharClass, Grapheme, is_word_separator, normalize

# what to do with an inventory grapheme that has no table row
UNMAPPED_ERROR = "error"
UNMAPPED_PASS = "pass"
UNMAPPED_POLICIES = (UNMAPPED_ERROR, UNMAPPED_PASS)


class Role(enum.Enum):
    """Context under which a grapheme is looked up.

    Independent vowels and matras can map differently, so rows carry a
    context code; A rows apply regardless of role.
    """

    VOWEL = "V"
    MATRA = "M"
    ANY = "A"


class Position(enum.Enum):
    ANY = ""
    WORD_INITIAL = "^"
    WORD_FINAL = "$"


class Resolution(enum.Enum):
    RULE = "Rule"
    STATISTICAL = "Statistical"
    FALLBACK = "Fallback"
    PASS_THROUGH = "PassThrough"


@dataclass
class MappedUnit:
    """One grapheme with its candidates and (eventually) its choice."""

    source: Grapheme
    candidates: tuple[str, ...]
    resolved: str | None = None
    resolution: Resolution | None = None
    unmapped: bool = False  # passed through because the table had no row

    @property
    def is_ambiguous(self) -> bool:
        return len(self.candidates) > 1


class MappingTable:
    """Lookup from (grapheme, context) to an ordered candidate tuple."""

    def __init__(self, entries):
        # entries: {(key, Role, Position): (candidate, ...)}
        self._entries = dict(entries)
        for (key, role, pos), cands in self._entries.items():
            if not cands:
                raise ValueError(f"empty candidate list for {key!r}")
            if len(set(cands)) != len(cands):
                raise ValueError(f"duplicate candidates for {key!r}")

    def __len__(self):
        return len(self._entries)

    def get(self, key: str, role: Role, position: Position = Position.ANY):
        return self._entries.get((key, role, position))

    def lookup(
        self,
        key: str,
        role: Role,
        *,
        word_initial: bool = False,
        word_final: bool = False,
    ) -> tuple[str, ...] | None:
        """Most specific matching row, or None.

        Precedence: exact role before A rows; within a role, positional
        variants (word-initial, then word-final) before the plain row.
        A key that misses entirely is retried with any virama stripped,
        since the vowel killer has no letter of its own in the target
        script.
        """
        roles = (role,) if role is Role.ANY else (role, Role.ANY)
        for r in roles:
            if word_initial:
                hit = self._entries.get((key, r, Position.WORD_INITIAL))
                if hit is not None:
                    return hit
            if word_final:
                hit = self._entries.get((key, r, Position.WORD_FINAL))
                if hit is not None:
                    return hit
            hit = self._entries.get((key, r, Position.ANY))
            if hit is not None:
                return hit
        if VIRAMA in key:
            return self.lookup(
                key.replace(VIRAMA, ""),
                role,
                word_initial=word_initial,
                word_final=word_final,
            )
        return None

    def ambiguous_keys(self) -> set[str]:
        return {
            key for (key, _r, _p), cands in self._entries.items() if len(cands) > 1
        }


def load_mapping(path) -> MappingTable:
    """Read a mapping file: ``<grapheme>TAB<context>TAB<candidates...>``.

    Context is V, M or A with an optional ``^`` or ``$`` suffix for
    word-initial / word-final rows.  ``#`` starts a comment.  Empty
    candidates, duplicate candidates in a row, and duplicate rows for
    the same (grapheme, context) are all rejected.
    """
    entries = {}
    role_by_code = {r.value: r for r in Role}
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) < 3:
                raise DataFormatError(
                    "expected <grapheme>TAB<context>TAB<candidate>...",
                    path=path,
                    line=line_no,
                )
            key = normalize(parts[0])
            if not key:
                raise DataFormatError("empty grapheme field", path=path, line=line_no)
            ctx = parts[1].strip()
            position = Position.ANY
            if ctx.endswith("^"):
                position = Position.WORD_INITIAL
                ctx = ctx[:-1]
            elif ctx.endswith("$"):
                position = Position.WORD_FINAL
                ctx = ctx[:-1]
            role = role_by_code.get(ctx)
            if role is None:
                raise DataFormatError(
                    f"unknown context code {parts[1]!r}", path=path, line=line_no
                )
            candidates = tuple(normalize(c) for c in parts[2:])
            if any(not c for c in candidates):
                raise DataFormatError("empty candidate", path=path, line=line_no)
            if len(set(candidates)) != len(candidates):
                raise DataFormatError(
                    f"duplicate candidate for {key!r}", path=path, line=line_no
                )
            entry_key = (key, role, position)
            if entry_key in entries:
                raise DataFormatError(
                    f"duplicate row for {key!r} in context {parts[1]!r}",
                    path=path,
                    line=line_no,
                )
            entries[entry_key] = candidates
    return MappingTable(entries)


def _role_of(grapheme: Grapheme, pattern: PhonemePattern, index: int) -> Role:
    if pattern is PhonemePattern.VOWEL:
        return Role.VOWEL
    if pattern is PhonemePattern.CONSONANT_VOWEL and index == 1:
        return Role.MATRA
    return Role.ANY


def map_phonemes(
    table: MappingTable,
    phonemes,
    *,
    unmapped_policy: str = UNMAPPED_ERROR,
) -> list[MappedUnit]:
    """Map each grapheme of each phoneme to its candidate targets.

    Output is one unit per grapheme, in order.  Single-candidate rows
    resolve immediately (Rule); multi-candidate rows stay unresolved for
    the statistical layer; Other units pass straight through.
    """
    if unmapped_policy not in UNMAPPED_POLICIES:
        raise ValueError(f"unknown unmapped policy {unmapped_policy!r}")
    flat = []  # (grapheme, role)
    for ph in phonemes:
        if ph.pattern is PhonemePattern.OTHER:
            flat.extend((g, None) for g in ph.graphemes)
        else:
            flat.extend(
                (g, _role_of(g, ph.pattern, idx)) for idx, g in enumerate(ph.graphemes)
            )

    # word runs (for ^/$ rows): split on separator graphemes
    initial = [False] * len(flat)
    final = [False] * len(flat)
    run_start = None
    for i, (g, _role) in enumerate(flat + [(None, None)]):
        in_word = g is not None and not is_word_separator(g)
        if in_word and run_start is None:
            run_start = i
        elif not in_word and run_start is not None:
            initial[run_start] = True
            final[i - 1] = True
            run_start = None

    units = []
    offset = 0
    for i, (g, role) in enumerate(flat):
        if role is None:
            units.append(
                MappedUnit(g, (), resolved=g.text, resolution=Resolution.PASS_THROUGH)
            )
        else:
            candidates = table.lookup(
                g.text, role, word_initial=initial[i], word_final=final[i]
            )
            if candidates is None:
                if unmapped_policy == UNMAPPED_ERROR:
                    raise UnmappedGraphemeError(g.text, offset)
                units.append(
                    MappedUnit(
                        g,
                        (),
                        resolved=g.text,
                        resolution=Resolution.PASS_THROUGH,
                        unmapped=True,
                    )
                )
            elif len(candidates) == 1:
                units.append(
                    MappedUnit(g, candidates, candidates[0], Resolution.RULE)
                )
            else:
                units.append(MappedUnit(g, candidates))
        offset += len(g.text)
    return units


def ambiguous_count(units) -> int:
    """Number of units whose rule row offered more than one candidate."""
    return sum(1 for u in units if u.is_ambiguous)
