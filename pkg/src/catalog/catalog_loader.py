"""
Example catalog loading and management.

Each catalog entry is one worked example: a grtab command line and the exact
text it must print. ``grtab reproduce`` runs them all.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from core.log import get_logger

logger = get_logger(__name__)


@dataclass
class CatalogEntry:
    """One reproducible example."""

    name: str
    command: List[str]
    expected: str
    note: str = ""
    tags: List[str] = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: dict) -> "CatalogEntry":
        return cls(
            name=data["name"],
            command=[str(arg) for arg in data["command"]],
            expected=data["expected"],
            note=data.get("note", ""),
            tags=list(data.get("tags", [])),
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "command": list(self.command),
            "expected": self.expected,
            "note": self.note,
            "tags": list(self.tags),
        }


DEFAULT_ENTRIES = [
    {
        "name": "Tableau to monomial, Gr(3,6)",
        "command": ["convert", "--n", "3", "--m", "6", "--from", "tableau", "--to", "monomial", "[[1,2],[3,4],[5,6]]"],
        "expected": "Y[1,-5] Y[1,-3] Y[2,-2] Y[2,0]",
        "note": "The two-column tableau with rows 12, 34, 56 and its dominant monomial.",
        "tags": ["monomials"],
    },
    {
        "name": "Small-gaps factorization",
        "command": ["factor", "--n", "3", "--m", "6", "[[1,2],[3,4],[5,6]]"],
        "expected": "T' = 1,3,4|2,3,5|2,4,5|3,4,6\nT'' = () / 2,3,4|3,4,5",
        "note": "Four fundamental columns over two solid frozens.",
        "tags": ["tableaux"],
    },
    {
        "name": "Character of a two-column tableau",
        "command": ["ch", "--n", "3", "--m", "6", "1,2,4|3,5,6"],
        "expected": "P124*P356 - P123*P456",
        "note": "Two fundamental columns; one Bruhat step.",
        "tags": ["characters"],
    },
    {
        "name": "Character with frozen clearing",
        "command": ["ch", "--n", "3", "--m", "6", "[[1,2],[3,4],[5,6]]"],
        "expected": "P135*P246 - P134*P256 - P125*P346 + P124*P356 - 2*P123*P456",
        "note": "ch(T') over P234*P345 clears to a polynomial; the last coefficient is -2.",
        "tags": ["characters"],
    },
    {
        "name": "Character of the unit",
        "command": ["ch", "--n", "3", "--m", "6", "()"],
        "expected": "1",
        "note": "The empty tableau.",
        "tags": ["characters"],
    },
    {
        "name": "First q-character",
        "command": ["qchar", "Y[2,-4] Y[1,-1]"],
        "expected": "chi(Y[1,-1])*chi(Y[2,-4]) - chi(Y[3,-3])",
        "note": "Generic n.",
        "tags": ["characters"],
    },
    {
        "name": "Zelevinsky dual",
        "command": ["zelevinsky", "[0,0]+[-1,-1]+[-2,-1]+[-3,-2]+[-3,-2]+[-4,-3]+[-4,-4]+[-5,-5]"],
        "expected": "[-3,0]+[-2,-1]+[-5,-2]+[-4,-3]",
        "note": "Moeglin-Waldspurger algorithm on a nonregular multisegment.",
        "tags": ["monomials"],
    },
    {
        "name": "Pattern 4231",
        "command": ["lm", "[0,1]+[-2,0]+[-1,-1]+[-3,-2]"],
        "expected": "NonReal",
        "note": "Regular multisegment whose left endpoints form 4231.",
        "tags": ["monomials"],
    },
    {
        "name": "Pattern test on a nonregular multisegment",
        "command": ["lm", "[0,0]+[-1,-1]+[-2,-1]+[-3,-2]+[-3,-2]+[-4,-3]+[-4,-4]+[-5,-5]"],
        "expected": "NotApplicable",
        "note": "Repeated segments; the pattern criterion does not apply.",
        "tags": ["monomials"],
    },
    {
        "name": "g-vector grid",
        "command": ["gvector", "--n", "3", "--m", "6", "Y[1,-3] Y[1,-5] Y[2,0] Y[2,-2]"],
        "expected": "1: -1 0 1\n2: 0 1 0",
        "note": "Rows are i = 1, 2; columns t = 0, 1, 2.",
        "tags": ["cluster"],
    },
    {
        "name": "Mutation in Gr(2,5)",
        "command": ["mutate", "--n", "2", "--m", "5", "--at", "(1,0)"],
        "expected": "(1,0): 1,3 -> 2,4",
        "note": "Pentagon recurrence.",
        "tags": ["cluster"],
    },
    {
        "name": "Mutation in Gr(3,6)",
        "command": ["mutate", "--n", "3", "--m", "6", "--at", "(1,0)", "--check"],
        "expected": "(1,0): 1,2,4 -> 1,3,5 [relation holds]",
        "note": "Exchange relation verified with ch.",
        "tags": ["cluster"],
    },
    {
        "name": "Incompatible columns",
        "command": ["compatible", "--n", "3", "--m", "6", "1,2,4", "3,5,6"],
        "expected": "incompatible\ncertificate: P123*P456",
        "note": "ch(S)ch(T) - ch(S u T) is a single standard monomial.",
        "tags": ["characters"],
    },
    {
        "name": "Compatible columns",
        "command": ["compatible", "--n", "3", "--m", "5", "1,2,5", "1,3,4"],
        "expected": "compatible",
        "note": "Weakly separated pair.",
        "tags": ["characters"],
    },
]


class CatalogLoader:
    """Handles loading and listing catalog examples."""

    def __init__(self, catalog_dir: Path):
        """Initialize the loader; writes the default catalog into an empty directory."""
        self.catalog_dir = Path(catalog_dir)
        self.catalog_dir.mkdir(parents=True, exist_ok=True)
        self.entries: List[CatalogEntry] = []
        self._load_all_entries()

    def _load_all_entries(self):
        if not any(self.catalog_dir.glob("*.json")):
            self._create_default_entries()

        for entry_file in sorted(self.catalog_dir.glob("*.json")):
            entry = self._load_entry_from_file(entry_file)
            if entry:
                self.entries.append(entry)

    def _load_entry_from_file(self, file_path: Path) -> Optional[CatalogEntry]:
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                data = json.load(f)
            return CatalogEntry.from_dict(data)
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
            logger.error("Error loading catalog entry %s: %s", file_path, e)
            return None

    def _create_default_entries(self):
        for i, entry_data in enumerate(DEFAULT_ENTRIES, 1):
            entry_file = self.catalog_dir / f"example_{i:02d}.json"
            with open(entry_file, "w", encoding="utf-8") as f:
                json.dump(entry_data, f, indent=2)
                f.write("\n")

    def get_entry(self, index: int) -> Optional[CatalogEntry]:
        if 0 <= index < len(self.entries):
            return self.entries[index]
        return None

    def get_entry_count(self) -> int:
        return len(self.entries)

    def get_entry_names(self) -> List[str]:
        return [entry.name for entry in self.entries]
