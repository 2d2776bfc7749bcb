"""Constructors for the standard corpus algebras, plus JSON parse/serialize.

Wire format, bit-exact for hashing: {"size":N,"one":K,"sum":[[...],...]}
with -1 marking an undefined sum, no insignificant whitespace, newline
terminated.
"""

import json

from .core import UNDEF, CheckedEffectAlgebra, EffectAlgebraTable, validate


class ParseError(Exception):
    def __init__(self, message, offset=0):
        self.offset = offset
        super().__init__(f"{message} (byte offset {offset})")


class SpecError(ValueError):
    """Malformed compact constructor spec string."""


def chain(n):
    """Total-order algebra {0, a, 2a, ..., na = 1}; ka + ma defined iff k+m <= n."""
    if n < 1:
        raise ValueError("chain length must be >= 1")
    rows = [
        [i + j if i + j <= n else UNDEF for j in range(n + 1)] for i in range(n + 1)
    ]
    return validate(EffectAlgebraTable.from_rows(n + 1, n, rows))


def _as_checked(x):
    if isinstance(x, CheckedEffectAlgebra):
        return x
    return validate(x)


def horizontal_sum(summands):
    """Glue algebras at a shared 0 and shared 1.

    Interior elements of distinct summands are never summable; size-2
    summands contribute no interior elements and are absorbed.  Element
    order: 0, summand interiors in argument order, 1.
    """
    checked = [_as_checked(e) for e in summands]
    if not checked:
        raise ValueError("horizontal sum needs at least one summand")

    interiors = []  # (summand, local index) per global interior element
    local_to_global = []
    for t, e in enumerate(checked):
        mapping = {}
        for x in e.carrier:
            if x != 0 and x != e.one:
                mapping[x] = 1 + len(interiors)
                interiors.append((t, x))
        local_to_global.append(mapping)

    size = 2 + len(interiors)
    one = size - 1
    for t, mapping in enumerate(local_to_global):
        mapping[0] = 0
        mapping[checked[t].one] = one

    rows = [[UNDEF] * size for _ in range(size)]
    for x in range(size):
        rows[0][x] = rows[x][0] = x
    for gi, (t, x) in enumerate(interiors, start=1):
        e = checked[t]
        for y in e.carrier:
            v = e.table.sum[x][y]
            if v != UNDEF:
                rows[gi][local_to_global[t][y]] = local_to_global[t][v]
    return validate(EffectAlgebraTable.from_rows(size, one, rows))


def direct_product(e, f):
    """Coordinatewise product; (a,b)+(c,d) defined iff both coordinates are."""
    e, f = _as_checked(e), _as_checked(f)
    ne, nf = e.size, f.size
    size = ne * nf
    rows = [[UNDEF] * size for _ in range(size)]
    for a in range(ne):
        for b in range(nf):
            for c in range(ne):
                for d in range(nf):
                    ac = e.table.sum[a][c]
                    bd = f.table.sum[b][d]
                    if ac != UNDEF and bd != UNDEF:
                        rows[a * nf + b][c * nf + d] = ac * nf + bd
    return validate(
        EffectAlgebraTable.from_rows(size, e.one * nf + f.one, rows)
    )


def boolean_diamond():
    """The four-element Boolean algebra {0, p, q, 1} with p + q = 1."""
    rows = [
        [0, 1, 2, 3],
        [1, UNDEF, 3, UNDEF],
        [2, 3, UNDEF, UNDEF],
        [3, UNDEF, UNDEF, UNDEF],
    ]
    return validate(EffectAlgebraTable.from_rows(4, 3, rows))


def serialize(table):
    """Canonical bytes: fixed key order, no whitespace, newline-terminated."""
    doc = {"size": table.size, "one": table.one, "sum": [list(r) for r in table.sum]}
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode("ascii")


def parse(data):
    """Parse wire-format bytes into a table; axiom checking is validate's job."""
    if isinstance(data, bytes):
        data = data.decode("utf-8", errors="replace")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from exc
    if not isinstance(doc, dict) or set(doc) != {"size", "one", "sum"}:
        raise ParseError("expected an object with keys size, one, sum")
    size, one, sum_ = doc["size"], doc["one"], doc["sum"]
    if not isinstance(size, int) or isinstance(size, bool) or size < 2:
        raise ParseError("size must be an integer >= 2")
    if not isinstance(one, int) or isinstance(one, bool) or not 0 < one < size:
        raise ParseError("one must be an index in 1..size-1")
    if not isinstance(sum_, list) or len(sum_) != size:
        raise ParseError(f"sum must be a {size}x{size} matrix")
    for row in sum_:
        if not isinstance(row, list) or len(row) != size:
            raise ParseError(f"sum must be a {size}x{size} matrix")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or v < UNDEF or v >= size:
                raise ParseError(f"sum entry {v!r} out of range")
    return EffectAlgebraTable.from_rows(size, one, sum_)


CONSTRUCTOR_NAMES = ("chain", "hsum", "prod", "diamond")


def is_spec_string(text):
    head = text.split(":", 1)[0]
    return head in CONSTRUCTOR_NAMES


def from_spec(text):
    """Build a corpus algebra from a compact spec string.

    Grammar: "chain:N" | "hsum:L1,L2,..." | "prod:PART,PART" | "diamond",
    where PART is "chain:N" or "diamond".
    """
    name, _, rest = text.partition(":")
    if name == "diamond":
        if rest:
            raise SpecError(f"diamond takes no arguments: {text!r}")
        return boolean_diamond()
    if name == "chain":
        return chain(_spec_int(rest, text))
    if name == "hsum":
        lengths = [_spec_int(p, text) for p in rest.split(",")]
        return horizontal_sum([chain(l) for l in lengths])
    if name == "prod":
        parts = _split_prod(rest, text)
        if len(parts) < 2:
            raise SpecError(f"prod needs at least two factors: {text!r}")
        result = from_spec(parts[0])
        for p in parts[1:]:
            result = direct_product(result, from_spec(p))
        return result
    raise SpecError(f"unknown constructor {name!r}")


def _spec_int(text, whole):
    try:
        value = int(text)
    except ValueError:
        raise SpecError(f"expected an integer in {whole!r}") from None
    if value < 1:
        raise SpecError(f"lengths must be >= 1 in {whole!r}")
    return value


def _split_prod(rest, whole):
    # "chain:2,chain:3,diamond" -> ["chain:2", "chain:3", "diamond"]
    parts = []
    for tok in rest.split(","):
        if tok.startswith("chain:") or tok == "diamond":
            parts.append(tok)
        else:
            raise SpecError(f"prod factors must be chain:N or diamond: {whole!r}")
    return parts
