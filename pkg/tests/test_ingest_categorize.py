"""Tag-to-category mapping tests.

Expected categories here were assigned by hand from the tag tables,
independent of the rules file.
"""

import pytest

from stationscout.ingest import categories, rules


@pytest.fixture(scope="module")
def default_rules():
    return rules.load_default_rules()


def test_category_universe():
    assert len(categories.CATEGORY_IDS) == 20
    assert categories.CATEGORY_IDS == (
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
    assert categories.CATEGORY_IDS == tuple(sorted(categories.CATEGORY_IDS))


HAND_CLASSIFIED = [
    ({"highway": "cycleway"}, "roads_bike"),
    ({"amenity": "bank"}, "finances"),
    ({"amenity": "atm"}, "finances"),
    ({"amenity": "restaurant"}, "sustenance"),
    ({"amenity": "pub", "name": "Zlote Runo"}, "sustenance"),
    ({"amenity": "school"}, "education"),
    ({"amenity": "university"}, "education"),
    ({"amenity": "hospital"}, "healthcare"),
    ({"amenity": "pharmacy"}, "healthcare"),
    ({"amenity": "theatre"}, "culture_and_entertainment"),
    ({"amenity": "cinema"}, "culture_and_entertainment"),
    ({"amenity": "place_of_worship"}, "other"),
    ({"amenity": "police"}, "other"),
    ({"amenity": "post_office"}, "other"),
    ({"amenity": "parking"}, "transportation"),
    ({"amenity": "bus_station"}, "transportation"),
    ({"highway": "bus_stop"}, "transportation"),
    ({"railway": "station"}, "transportation"),
    ({"public_transport": "platform"}, "transportation"),
    ({"aerialway": "gondola"}, "aerialway"),
    ({"aeroway": "aerodrome"}, "airports"),
    ({"aeroway": "runway"}, "airports"),
    ({"emergency": "defibrillator"}, "emergency"),
    ({"historic": "ruins"}, "historic"),
    ({"historic": "monument"}, "historic"),
    ({"tourism": "hotel"}, "tourism"),
    ({"tourism": "museum"}, "tourism"),
    ({"tourism": "zoo"}, "tourism"),
    ({"shop": "bakery"}, "shops"),
    ({"shop": "supermarket"}, "shops"),
    ({"shop": "mall"}, "other"),
    ({"sport": "soccer"}, "sport"),
    ({"leisure": "pitch"}, "sport"),
    ({"leisure": "sports_centre"}, "sport"),
    ({"leisure": "stadium"}, "sport"),
    ({"leisure": "swimming_pool"}, "sport"),
    ({"leisure": "park"}, "leisure"),
    ({"leisure": "playground"}, "leisure"),
    ({"leisure": "garden"}, "leisure"),
    ({"natural": "water"}, "water"),
    ({"natural": "beach"}, "water"),
    ({"waterway": "river"}, "water"),
    ({"waterway": "canal"}, "water"),
    ({"landuse": "reservoir"}, "water"),
    ({"landuse": "cemetery"}, "other"),
    ({"highway": "residential"}, "roads_drive"),
    ({"highway": "primary"}, "roads_drive"),
    ({"highway": "service"}, "roads_drive"),
    ({"highway": "footway"}, "roads_walk"),
    ({"highway": "pedestrian"}, "roads_walk"),
    ({"highway": "path"}, "roads_walk"),
    ({"highway": "steps"}, "roads_walk"),
    ({"building": "yes"}, "buildings"),
    ({"building": "office"}, "buildings"),
    ({"building": "school"}, "education"),
    ({"building": "hospital"}, "healthcare"),
]


@pytest.mark.parametrize("tags,expected", HAND_CLASSIFIED)
def test_hand_classified_tags(default_rules, tags, expected):
    assert rules.categorize(tags, default_rules) == expected


def test_empty_tags_match_nothing(default_rules):
    assert rules.categorize({}, default_rules) is None


def test_untagged_junk_dropped(default_rules):
    assert rules.categorize({"name": "somewhere"}, default_rules) is None
    assert rules.categorize({"highway": "street_lamp"}, default_rules) is None


def test_station_tag_excluded(default_rules):
    # exclusion precedes every categorizing rule
    assert rules.categorize({"amenity": "bicycle_rental"}, default_rules) is None
    assert rules.categorize(
        {"amenity": "bicycle_rental", "shop": "bicycle"}, default_rules
    ) is None


def test_first_match_wins(default_rules):
    # a tagged shop inside a building stays a shop
    assert rules.categorize({"building": "yes", "shop": "bakery"}, default_rules) == "shops"
    # sport pitch carrying a generic leisure tag stays sport
    assert rules.categorize({"leisure": "pitch", "surface": "grass"}, default_rules) == "sport"


def test_rules_are_versioned(default_rules):
    assert default_rules.version
    for rule in default_rules.rules:
        assert rule.category is None or rule.category in categories.CATEGORY_IDS


def test_determinism(default_rules):
    tags = {"amenity": "cafe", "building": "yes", "tourism": "hotel"}
    first = rules.categorize(tags, default_rules)
    assert all(rules.categorize(tags, default_rules) == first for _ in range(5))
