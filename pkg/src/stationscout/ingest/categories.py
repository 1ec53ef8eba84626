"""The fixed 20-category scheme.

CATEGORY_IDS is the canonical column order for every embedding; nothing
downstream may reorder it.
"""

CATEGORY_IDS = (
    "aerialway",
    "airports",
    "buildings",
    "culture_and_entertainment",
    "education",
    "emergency",
    "finances",
    "healthcare",
    "historic",
    "leisure",
    "other",
    "roads_bike",
    "roads_drive",
    "roads_walk",
    "shops",
    "sport",
    "sustenance",
    "tourism",
    "transportation",
    "water",
)

CATEGORY_INDEX = {name: i for i, name in enumerate(CATEGORY_IDS)}

# categories whose features are linear in the shape embedding
LINE_CATEGORIES = frozenset({"roads_bike", "roads_drive", "roads_walk", "water"})
