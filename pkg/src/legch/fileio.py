"""Line-based plain-text files describing DGA presentations.

Format (UTF-8, one statement per line, ``#`` starts a comment, blank
lines ignored)::

    modulus 0
    gen a1 1
    gen b1 0
    d a1 = 1 + b1 + b1 b1

The first statement fixes the grading modulus.  ``gen`` lines declare
generators in order with their degree; ``d`` lines give differentials as
``+``-separated terms, each term either ``1`` (the empty word), ``0``
(the zero polynomial, alone), or juxtaposed generator names.  A missing
``d`` line means zero differential.  Parsing does not require the
differential laws to hold; run the validator for that.
"""

from __future__ import annotations

import re
import warnings
from typing import Dict, List

from . import ContractError
from .algebra import DGA, Poly, reduce_terms

__all__ = ["FileFormatWarning", "parse_dga", "serialize_dga", "format_poly", "bundled_text"]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class FileFormatWarning(UserWarning):
    """Recoverable oddity in a DGA file, such as terms cancelling mod 2."""


def _fail(lineno: int, message: str) -> None:
    raise ContractError("line %d: %s" % (lineno, message))


def _parse_terms(lineno: int, name: str, text: str, declared: Dict[str, int]) -> Poly:
    chunks = [c.strip() for c in text.split("+")]
    if any(not c for c in chunks):
        _fail(lineno, "empty term in differential of %s" % name)
    if "0" in chunks:
        if len(chunks) > 1:
            _fail(lineno, "term 0 must stand alone in differential of %s" % name)
        return frozenset()
    words = []
    for chunk in chunks:
        if chunk == "1":
            words.append(())
            continue
        letters = tuple(chunk.split())
        for letter in letters:
            if letter not in declared:
                _fail(lineno, "undeclared generator %s in differential of %s" % (letter, name))
        words.append(letters)
    poly, cancelled = reduce_terms(words)
    if cancelled:
        warnings.warn(
            "line %d: %d pair(s) of duplicate terms cancelled mod 2 in d %s"
            % (lineno, cancelled, name),
            FileFormatWarning,
            stacklevel=3,
        )
    return poly


def parse_dga(text: str) -> DGA:
    """Parse a DGA description; raises ContractError with a line number."""
    modulus = None
    generators: List[str] = []
    degrees: Dict[str, int] = {}
    diff: Dict[str, Poly] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if modulus is None:
            if fields[0] != "modulus":
                _fail(lineno, "expected the modulus line first, got %r" % line)
            if len(fields) != 2:
                _fail(lineno, "expected 'modulus <non-negative integer>'")
            try:
                modulus = int(fields[1])
            except ValueError:
                _fail(lineno, "modulus %r is not an integer" % fields[1])
            if modulus < 0:
                _fail(lineno, "modulus must be non-negative")
            continue
        if fields[0] == "gen":
            if len(fields) != 3:
                _fail(lineno, "expected 'gen <name> <degree>'")
            name = fields[1]
            if not _NAME_RE.match(name):
                _fail(lineno, "invalid generator name %r" % name)
            if name in degrees:
                _fail(lineno, "duplicate generator declaration: %s" % name)
            try:
                degree = int(fields[2])
            except ValueError:
                _fail(lineno, "degree %r is not an integer" % fields[2])
            generators.append(name)
            degrees[name] = degree
        elif fields[0] == "d":
            if len(fields) < 4 or fields[2] != "=":
                _fail(lineno, "expected 'd <name> = <poly>'")
            name = fields[1]
            if name not in degrees:
                _fail(lineno, "undeclared generator %s" % name)
            if name in diff:
                _fail(lineno, "duplicate differential for %s" % name)
            diff[name] = _parse_terms(lineno, name, " ".join(fields[3:]), degrees)
        else:
            _fail(lineno, "unrecognized statement %r" % fields[0])
    if modulus is None:
        raise ContractError("missing modulus line")
    return DGA(modulus, tuple(generators), degrees, diff)


def format_poly(dga: DGA, poly: Poly) -> str:
    """Render a polynomial in canonical term order."""
    if not poly:
        return "0"
    return " + ".join(
        " ".join(word) if word else "1" for word in dga.sorted_terms(poly)
    )


def serialize_dga(dga: DGA) -> str:
    """Canonical text form; ``parse_dga`` inverts it exactly."""
    lines = ["modulus %d" % dga.modulus]
    for g in dga.generators:
        lines.append("gen %s %d" % (g, dga.degrees[g]))
    for g in dga.generators:
        if dga.d(g):
            lines.append("d %s = %s" % (g, format_poly(dga, dga.d(g))))
    return "\n".join(lines) + "\n"


def bundled_text(name: str) -> str:
    """Text of a data file shipped with the package (e.g. 'trefoil.dga')."""
    from importlib import resources

    return (resources.files("legch") / "data" / name).read_text(encoding="utf-8")
