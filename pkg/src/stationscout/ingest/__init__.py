"""Feature and station ingest: fetch, categorize, cache, snapshot."""

from .categories import CATEGORY_IDS, CATEGORY_INDEX, LINE_CATEGORIES
from .elements import CategorizedFeature, RawOsmElement, parse_overpass_elements
from .extract import CityExtract, build_extract, fetch_city_extract, load_extract
from .overpass import OverpassClient, city_slug
from .rules import CategoryRules, categorize, load_default_rules, load_rules
from .stations import StationRecord, load_stations

__all__ = [
    "CATEGORY_IDS",
    "CATEGORY_INDEX",
    "LINE_CATEGORIES",
    "CategorizedFeature",
    "CategoryRules",
    "CityExtract",
    "OverpassClient",
    "RawOsmElement",
    "StationRecord",
    "build_extract",
    "categorize",
    "city_slug",
    "fetch_city_extract",
    "load_default_rules",
    "load_extract",
    "load_stations",
    "parse_overpass_elements",
]
