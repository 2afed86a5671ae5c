"""The rule layer: table lookups and what they leave unresolved.

Most graphemes have exactly one target spelling and never need
statistics.  The interesting rows are the ones with several candidates.

Run:  python3 demos/02_rule_mapping.py
"""

from sindhi_translit import data as shipped
from sindhi_translit.mapping import Role, load_mapping, map_phonemes
from sindhi_translit.phonemes import phonify
from sindhi_translit.script import load_inventory

inventory = load_inventory(shipped.inventory_path())
table = load_mapping(shipped.mapping_path())

print(f"mapping rows          {len(table)}")
print(f"ambiguous graphemes   {sorted(table.ambiguous_keys())}")
print()

print("independent vowels map one-to-one:")
for vowel in ["अ", "आ", "इ", "ई", "उ", "ऊ", "ए", "ऐ", "ओ", "औ", "अं"]:
    print(f"  {vowel:>3}  ->  {table.lookup(vowel, Role.VOWEL)[0]}")
print()

for word in ["कमल", "आम", "सच"]:
    units = map_phonemes(table, phonify(inventory, word))
    print(f"{word!r}")
    for unit in units:
        state = unit.resolved if unit.resolved else f"?{list(unit.candidates)}"
        kind = unit.resolution.value if unit.resolution else "unresolved"
        print(f"  {unit.source.text:>3}  {state:<20} {kind}")
    print()

print("every unresolved unit above is work for the statistical layer")
print("(see 03_train_and_disambiguate.py)")
