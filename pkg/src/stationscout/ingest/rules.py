"""Ordered tag-to-category rules, first match wins."""

import importlib.resources
import json
from dataclasses import dataclass

from .categories import CATEGORY_IDS


@dataclass(frozen=True)
class Rule:
    key: str
    value: str  # exact tag value or "*"
    category: str | None  # None = excluded from the learning signal


@dataclass(frozen=True)
class CategoryRules:
    rules: tuple[Rule, ...]
    version: str
    station_exclusion: tuple[tuple[str, str], ...]

    def keys(self) -> tuple[str, ...]:
        """Distinct tag keys the rules look at, in first-seen order."""
        seen = []
        for rule in self.rules:
            if rule.key not in seen:
                seen.append(rule.key)
        return tuple(seen)


def _parse(doc: dict) -> CategoryRules:
    rules = []
    for entry in doc["rules"]:
        category = entry["category"]
        if category is not None and category not in CATEGORY_IDS:
            raise ValueError(f"unknown category in rules file: {category}")
        rules.append(Rule(entry["key"], entry["value"], category))
    exclusion = tuple((k, v) for k, v in doc.get("station_exclusion", []))
    return CategoryRules(tuple(rules), doc["version"], exclusion)


def load_default_rules() -> CategoryRules:
    ref = importlib.resources.files("stationscout") / "data" / "category_rules.json"
    return _parse(json.loads(ref.read_text()))


def load_rules(path) -> CategoryRules:
    with open(path) as f:
        return _parse(json.load(f))


def categorize(tags: dict, rules: CategoryRules) -> str | None:
    """Category of the first matching rule, or None when nothing matches."""
    if not rules.rules:
        raise ValueError("empty rule list")
    for rule in rules.rules:
        got = tags.get(rule.key)
        if got is None:
            continue
        if rule.value == "*" or rule.value == got:
            return rule.category
    return None
