"""Group specifications: a small text grammar and the default corpus.

Grammar (whitespace-insensitive, products are left-associative)::

    spec   := term ("x" term)*
    term   := family ":" INT | "file:" PATH
    family := cyclic | dihedral | sym | alt | dicyclic | heisenberg

A ``file:`` path runs up to the next `` x <family>:`` separator or the end.
The file holds either ``{"order": n, "table": [[...]], "labels": [...]}`` or
``{"degree": d, "generators": [[...], ...]}`` with 0-based indices.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

from . import families
from .errors import GrpdegError, InvalidParameter, MalformedTable, ParseError
from .group import FiniteGroup, from_cayley_table

FAMILIES = {
    "cyclic": families.cyclic,
    "dihedral": families.dihedral,
    "sym": families.symmetric,
    "alt": families.alternating,
    "dicyclic": families.dicyclic,
    "heisenberg": families.heisenberg,
}

_KEYWORD = re.compile(r"\s*(cyclic|dihedral|sym|alt|dicyclic|heisenberg|file)\s*:\s*")
_INT = re.compile(r"\d+")
_SEP = re.compile(r"\s*x\s*")
_PATH_END = re.compile(r"\s*x\s*(?=(?:cyclic|dihedral|sym|alt|dicyclic|heisenberg|file)\s*:)")


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # "family", "file" or "product"
    family: Optional[str] = None
    param: Optional[int] = None
    path: Optional[str] = None
    left: Optional["GroupSpec"] = None
    right: Optional["GroupSpec"] = None

    def __str__(self):
        if self.kind == "family":
            return f"{self.family}:{self.param}"
        if self.kind == "file":
            return f"file:{self.path}"
        return f"{self.left} x {self.right}"

    def order(self) -> Optional[int]:
        """Order without building the group (None for files)."""
        if self.kind == "product":
            a, b = self.left.order(), self.right.order()
            return None if a is None or b is None else a * b
        if self.kind == "file":
            return None
        p = self.param
        return {
            "cyclic": p,
            "dihedral": 2 * p,
            "sym": math.factorial(p),
            "alt": math.factorial(p) // 2,
            "dicyclic": 4 * p,
            "heisenberg": p**3,
        }[self.family]


def _term(text: str, pos: int) -> tuple[GroupSpec, int]:
    m = _KEYWORD.match(text, pos)
    if not m:
        raise ParseError("expected a family name followed by ':'", text, pos)
    word, pos = m.group(1), m.end()
    if word == "file":
        end = _PATH_END.search(text, pos)
        stop = end.start() if end else len(text)
        path = text[pos:stop].strip()
        if not path:
            raise ParseError("empty file path", text, pos)
        return GroupSpec("file", path=path), stop
    num = _INT.match(text, pos)
    if not num:
        raise ParseError("expected a non-negative integer", text, pos)
    return GroupSpec("family", family=word, param=int(num.group())), num.end()


def parse_group_spec(text: str) -> GroupSpec:
    spec, pos = _term(text, 0)
    while True:
        rest = text[pos:]
        if not rest.strip():
            break
        sep = _SEP.match(text, pos)
        if not sep:
            raise ParseError("expected 'x' between factors", text, pos)
        right, pos = _term(text, sep.end())
        spec = GroupSpec("product", left=spec, right=right)
    _validate(spec)
    return spec


def _validate(spec: GroupSpec) -> None:
    if spec.kind == "product":
        _validate(spec.left)
        _validate(spec.right)
    elif spec.kind == "family":
        least = {"alt": 3, "dicyclic": 2, "heisenberg": 2}.get(spec.family, 1)
        if spec.param < least:
            raise InvalidParameter(f"{spec.family} needs a parameter >= {least}, got {spec.param}")
        if spec.family == "heisenberg" and not families._is_prime(spec.param):
            raise InvalidParameter(f"heisenberg needs a prime, got {spec.param}")


def load_group_file(path: str) -> FiniteGroup:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise GrpdegError(f"cannot read group file {path}: {exc}") from exc
    name = f"file:{path}"
    if isinstance(data, dict) and "table" in data:
        table = data["table"]
        if "order" in data and data["order"] != len(table):
            raise MalformedTable(f"order {data['order']} does not match {len(table)} rows")
        return from_cayley_table(table, data.get("labels"), name=name)
    if isinstance(data, dict) and "generators" in data:
        return families.from_permutation_generators(
            data["degree"], data["generators"], name=name
        )
    raise MalformedTable(f"{path}: expected a 'table' or 'generators' key")


@lru_cache(maxsize=1024)
def _build(canonical: str) -> FiniteGroup:
    spec = parse_group_spec(canonical)
    if spec.kind == "family":
        return FAMILIES[spec.family](spec.param)
    if spec.kind == "file":
        return load_group_file(spec.path)
    g = families.direct_product(_build(str(spec.left)), _build(str(spec.right)))
    g.name = canonical
    return g


def resolve(spec) -> FiniteGroup:
    """Build (or fetch the cached) group for a spec string or GroupSpec.

    Identical specs resolve to the same object, so per-group caches are shared.
    """
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    return _build(str(spec))


def _base_specs() -> list[str]:
    out = [f"cyclic:{n}" for n in range(1, 25)]
    out += [f"dihedral:{n}" for n in range(1, 13)]
    out += ["sym:3", "sym:4", "alt:4"]
    out += [f"dicyclic:{m}" for m in range(2, 6)]
    out += ["heisenberg:2", "heisenberg:3"]
    return out


def default_corpus(max_order: int = 24) -> list[str]:
    """Base families plus all pairwise products, keeping orders <= max_order."""
    base = [(s, parse_group_spec(s).order()) for s in _base_specs()]
    out = [s for s, o in base if o <= max_order]
    factors = [(s, o) for s, o in base if o > 1]
    for i, (a, oa) in enumerate(factors):
        for b, ob in factors[i:]:
            if oa * ob <= max_order:
                out.append(f"{a} x {b}")
    return out


def read_corpus(path: str) -> list[str]:
    """A JSON array of specs, or a text file with one spec per line ('#' comments)."""
    text = Path(path).read_text()
    if path.endswith(".json"):
        specs = json.loads(text)
        if not isinstance(specs, list) or not all(isinstance(s, str) for s in specs):
            raise GrpdegError(f"{path}: expected a JSON array of spec strings")
        return specs
    lines = (line.split("#", 1)[0].strip() for line in text.splitlines())
    return [line for line in lines if line]
