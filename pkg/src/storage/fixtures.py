"""Fixture corpus: hand-written documents plus generator seeds."""

import json
import logging
from pathlib import Path

from src.config.settings import settings

logger = logging.getLogger(__name__)

SPLIT_IDEMPOTENT = {
    "groupoids": {
        "X": {"discrete": ["x", "y"]},
        "M": {"discrete": ["x", "y", "s", "p", "e"]},
    },
    "spans": {
        "A": {
            "left": "X",
            "right": "X",
            "apex": "M",
            "left_map": {"objects": {"x": "x", "y": "y", "s": "x", "p": "y", "e": "y"}},
            "right_map": {"objects": {"x": "x", "y": "y", "s": "y", "p": "x", "e": "y"}},
        }
    },
}

SCALARS = {
    "groupoids": {
        "E": {"discrete": ["*"]},
        "PM": {"discrete": ["u", "v"]},
    },
    "spans": {
        "one": {
            "left": "E",
            "right": "E",
            "apex": "E",
            "left_map": {"objects": {"*": "*"}},
            "right_map": {"objects": {"*": "*"}},
        },
        "minus_one": {
            "left": "E",
            "right": "E",
            "apex": "E",
            "left_map": {"objects": {"*": "*"}},
            "right_map": {"objects": {"*": "*"}},
            "rho": {"*": -1},
        },
        "plus_minus": {
            "left": "E",
            "right": "E",
            "apex": "PM",
            "left_map": {"objects": {"u": "*", "v": "*"}},
            "right_map": {"objects": {"u": "*", "v": "*"}},
            "rho": {"v": -1},
        },
    },
}

GROUP_ACTIONS = {
    "groupoids": {
        "E": {"discrete": ["*"]},
        "G": {"discrete": ["e", "a"]},
        "BG": {"group": {"catalog": "C2"}, "parity": {"a": -1}},
    },
    "spans": {
        "signed_set": {
            "left": "E",
            "right": "E",
            "apex": "G",
            "left_map": {"objects": {"e": "*", "a": "*"}},
            "right_map": {"objects": {"e": "*", "a": "*"}},
            "rho": {"a": -1},
        },
        "name_of_point": {
            "left": "E",
            "right": "BG",
            "apex": "E",
            "left_map": {"objects": {"*": "*"}},
            "right_map": {"objects": {"*": "*"}},
        },
        "true_composite": {
            "left": "E",
            "right": "BG",
            "apex": "G",
            "left_map": {"objects": {"e": "*", "a": "*"}},
            "right_map": {"objects": {"e": "*", "a": "*"}},
            "rho": {"a": -1},
        },
    },
    "actions": {
        "right_multiplication": {
            "group": {"catalog": "C2"},
            "target": "G",
            "objects": [["e", "a", "a"], ["a", "a", "e"]],
        },
        "odd_point": {
            "group": {"catalog": "C2"},
            "target": "E",
            "objects": [["*", "a", "*"]],
            "theta": [["a", "*", -1]],
        },
    },
}

GENERATED = {
    "generated": {
        "foot": {"kind": "foot", "seed": 4},
        "span": {"kind": "span", "seed": 5},
        "endo1": {"kind": "endo_span", "seed": 1, "degree": 1},
        "endo2": {"kind": "endo_span", "seed": 2, "degree": 2},
        "endo3": {"kind": "endo_span", "seed": 3, "degree": 3},
    }
}

FIXTURES = {
    "split_idempotent": SPLIT_IDEMPOTENT,
    "scalars": SCALARS,
    "group_actions": GROUP_ACTIONS,
    "generated": GENERATED,
}


def write_fixtures(fixture_dir: str | None = None) -> list[Path]:
    """Write every fixture document.

    Args:
        fixture_dir: Target directory (default: from settings)

    Returns:
        Paths written
    """
    target = Path(fixture_dir or settings.FIXTURE_DIR)
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name, document in FIXTURES.items():
        path = target / f"{name}.json"
        path.write_text(json.dumps(document, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        logger.info("wrote %s", path)
        written.append(path)
    return written


if __name__ == "__main__":
    for path in write_fixtures():
        print(f"✓ {path}")
