"""Walk through the first pipeline stage: text to graphemes to phonemes.

Run:  python3 demos/01_segmentation.py
"""

from sindhi_translit import data as shipped
from sindhi_translit.phonemes import ORPHAN_PASS, phonify
from sindhi_translit.script import cluster_graphemes, load_inventory, normalize

inventory = load_inventory(shipped.inventory_path())
print(inventory)
print()

samples = [
    "सिक्को",   # conjunct: the virama stays glued to its consonant
    "खंड",      # anusvara rides as a matra
    "अंब",      # ...but the nasalised independent vowel is one unit
    "क़लम",     # nukta form, stored decomposed
    "तारो, हलु",
]

for text in samples:
    graphemes = cluster_graphemes(inventory, text)
    keys = "  ".join(f"{g.text}:{g.char_class.value}" for g in graphemes)
    print(f"{text!r}")
    print(f"  graphemes  {keys}")
    phonemes = phonify(inventory, text, orphan_policy=ORPHAN_PASS)
    units = "  ".join(f"[{p.text}]{p.pattern.value}" for p in phonemes)
    print(f"  phonemes   {units}")
    joined = "".join(p.text for p in phonemes)
    assert joined == normalize(text), "segmentation must be lossless"
    print()

# an orphaned vowel sign is a data problem; the default policy says so
from sindhi_translit.errors import OrphanMatraError

try:
    phonify(inventory, "ोक")
except OrphanMatraError as err:
    print(f"default policy on 'ोक': {err}")
