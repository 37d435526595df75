"""Proof engine for the triple-star floors, with independently checkable output.

The procedure mirrors the counting argument it implements: take U, the
vertex set of a maximum double star, against the target bound (n/(r-1)
globally, rn/(r^2-r+1) with locality r).  If |U| already meets the ceiling
of the bound, reinterpret U as a triple star by promoting one leaf to a
third centre (single-edge degenerate form when |U| = 2, which forces the
ceiling to be at most 2).  Otherwise, write |U| = bound - a with a > 0;
maximality of U forces some leaf u to have at least a same-colour edges
leaving U, and attaching u's outward star yields |U| + delta(u) >= bound.
A run that ends below the ceiling raises TheoremViolation with the
offending colouring attached, since that would refute a theorem.

Certificates record the witness plus an execution trace; the verifier
re-checks every claim from the colouring alone and never trusts the trace.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .colouring import (EdgeColouring, iter_bits, locality, subgraph_diameter,
                        triple_star_bound, triple_star_bound_local, validate)
from .errors import CertificateFormatError, TheoremViolation
from .stars import max_double_star

Q = Fraction


@dataclass(frozen=True)
class ProofTrace:
    """What the run actually did; informative only, never trusted by verify."""

    centres_U: tuple[int, int]
    order_U: int
    leaf_u: int | None  # None when U already met the bound
    delta: int


@dataclass(frozen=True)
class TripleStarCertificate:
    mode: str  # "global" | "local"
    n: int
    r: int
    bound: Q
    colour: int
    centres: tuple[int, ...]  # (u, x, w) with x the middle; (x, y) when degenerate
    vertices: tuple[int, ...]
    order: int
    degenerate: bool
    trace: ProofTrace

    @property
    def slack(self) -> Q:
        """a = bound - |U|: positive exactly when the extension step ran."""
        return self.bound - self.trace.order_U


def prove_global(colouring: EdgeColouring, r: int) -> TripleStarCertificate:
    """Certified monochromatic triple star of order >= n/(r-1), r >= 3."""
    if r < 3:
        raise ValueError("theorem requires r >= 3")
    if colouring.m != r:
        raise ValueError(f"colouring declares {colouring.m} colours, but r={r} was claimed")
    _require_valid(colouring)
    return _run(colouring, "global", r, triple_star_bound(colouring.n, r))


def prove_local(colouring: EdgeColouring, r: int) -> TripleStarCertificate:
    """Certified monochromatic triple star of order >= rn/(r^2-r+1) under locality r."""
    if r < 3:
        raise ValueError("theorem requires r >= 3")
    _require_valid(colouring)
    report = locality(colouring)
    if report.locality > r:
        v = report.worst_vertex()
        raise ValueError(f"locality violated: vertex {v} meets {report.locality} colours, above r={r}")
    return _run(colouring, "local", r, triple_star_bound_local(colouring.n, r))


def _require_valid(colouring: EdgeColouring) -> None:
    report = validate(colouring)
    if not report.ok:
        raise ValueError("invalid colouring: " + "; ".join(report.violations))


def _run(colouring: EdgeColouring, mode: str, r: int, bound: Q) -> TripleStarCertificate:
    ds = max_double_star(colouring)
    c = ds.colour
    x, y = ds.centres
    masks = colouring.view.masks[c]
    union = masks[x] | masks[y]
    target = math.ceil(bound)
    trace_centres = (x, y)

    if ds.order >= target:
        if ds.order == 2:
            # bare centre edge; only reachable when the ceiling is <= 2
            cert = TripleStarCertificate(mode, colouring.n, r, bound, c, (x, y),
                                         ds.vertices, 2, True,
                                         ProofTrace(trace_centres, 2, None, 0))
            return _guard(cert, colouring, target)
        centres, verts = _widen(masks, x, y, union)
        cert = TripleStarCertificate(mode, colouring.n, r, bound, c, centres,
                                     tuple(iter_bits(verts)), verts.bit_count(), False,
                                     ProofTrace(trace_centres, ds.order, None, 0))
        return _guard(cert, colouring, target)

    # |U| = bound - a with a > 0: maximality must hand us a leaf with
    # outward same-colour degree >= a.
    assert not masks[x] & ~union and not masks[y] & ~union, \
        "a centre reaches outside its own double star"
    best_u = -1
    best_delta = -1
    for u in ds.vertices:
        if u == x or u == y:
            continue
        delta = (masks[u] & ~union).bit_count()
        if delta > best_delta:
            best_u, best_delta = u, delta
    if best_u < 0:
        raise TheoremViolation(
            f"double star of order {ds.order} has no leaf to extend, "
            f"yet the bound demands {target}", colouring)
    if (masks[x] >> best_u) & 1:
        middle, far = x, y
    else:
        middle, far = y, x
    ends = (min(best_u, far), max(best_u, far))
    verts = masks[best_u] | masks[x] | masks[y]
    cert = TripleStarCertificate(mode, colouring.n, r, bound, c,
                                 (ends[0], middle, ends[1]),
                                 tuple(iter_bits(verts)), verts.bit_count(), False,
                                 ProofTrace(trace_centres, ds.order, best_u, best_delta))
    return _guard(cert, colouring, target)


def _widen(masks: list[int], x: int, y: int, union: int) -> tuple[tuple[int, int, int], int]:
    """Promote the smallest leaf to a third centre; keeps every vertex of U."""
    leaf_pool = masks[x] & ~(1 << y)
    if leaf_pool:
        z = (leaf_pool & -leaf_pool).bit_length() - 1
        middle, far = x, y
    else:
        leaf_pool = masks[y] & ~(1 << x)
        z = (leaf_pool & -leaf_pool).bit_length() - 1
        middle, far = y, x
    verts = masks[z] | masks[x] | masks[y]
    return (min(z, far), middle, max(z, far)), verts


def _guard(cert: TripleStarCertificate, colouring: EdgeColouring,
           target: int) -> TripleStarCertificate:
    if cert.order < target:
        raise TheoremViolation(
            f"produced witness of order {cert.order}, below the guaranteed {target}; "
            "either this implementation is wrong or the colouring refutes the theorem",
            colouring)
    return cert


# --- independent verification ------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_certificate(colouring: EdgeColouring, cert: TripleStarCertificate) -> VerificationReport:
    """Re-check every certified claim from the colouring alone.

    Distinct failed checks yield distinct reasons; the trace is ignored.
    Dependent checks are skipped once their prerequisites fail, so the
    report never indexes out of range.
    """
    failures: list[str] = []
    if cert.mode not in ("global", "local"):
        failures.append(f"unknown mode: {cert.mode!r}")
        return VerificationReport(tuple(failures))
    if cert.n != colouring.n:
        failures.append(f"vertex count mismatch: certificate says n={cert.n}, colouring has n={colouring.n}")
    if cert.r < 3:
        failures.append(f"r below 3: the theorems need r >= 3, certificate says r={cert.r}")
    if cert.mode == "global":
        if cert.r != colouring.m:
            failures.append(f"colour count mismatch: certificate says r={cert.r}, "
                            f"colouring declares m={colouring.m}")
        expected = Q(cert.n, cert.r - 1) if cert.r >= 2 else None
    else:
        report = locality(colouring)
        if report.locality > cert.r:
            failures.append(f"locality violated: vertex {report.worst_vertex()} meets "
                            f"{report.locality} colours, above r={cert.r}")
        expected = Q(cert.r * cert.n, cert.r * cert.r - cert.r + 1)
    if expected is not None and cert.bound != expected:
        failures.append(f"bound formula mismatch: expected {expected}, certificate carries {cert.bound}")
    if failures and cert.n != colouring.n:
        return VerificationReport(tuple(failures))

    if not 1 <= cert.colour <= colouring.m:
        failures.append(f"colour out of range: {cert.colour} not in 1..{colouring.m}")
        return VerificationReport(tuple(failures))
    n = colouring.n
    want = 2 if cert.degenerate else 3
    centres_ok = (len(cert.centres) == want
                  and len(set(cert.centres)) == want
                  and all(0 <= v < n for v in cert.centres))
    if not centres_ok:
        failures.append(f"centres invalid: expected {want} distinct vertices in range, got {cert.centres}")
        return VerificationReport(tuple(failures))
    if cert.degenerate:
        edges = [(cert.centres[0], cert.centres[1])]
    else:
        edges = [(cert.centres[1], cert.centres[0]), (cert.centres[1], cert.centres[2])]
    for p, qv in edges:
        if colouring.colour_of(p, qv) != cert.colour:
            failures.append(f"edge colour mismatch: {{{p},{qv}}} does not carry colour {cert.colour}")

    verts = cert.vertices
    if not verts or list(verts) != sorted(set(verts)) or verts[0] < 0 or verts[-1] >= n:
        failures.append("vertex list invalid: must be nonempty, strictly increasing, in range")
        return VerificationReport(tuple(failures))
    for v in cert.centres:
        if v not in verts:
            failures.append(f"centre {v} missing from vertex set")
    if cert.order != len(verts):
        failures.append(f"order mismatch: field says {cert.order}, vertex list has {len(verts)}")

    if cert.degenerate:
        if tuple(sorted(cert.centres)) != verts:
            failures.append("degenerate witness must consist of exactly its centre edge")
    else:
        masks = colouring.view.masks[cert.colour]
        union = 0
        for v in cert.centres:
            union |= masks[v]
        claimed = 0
        for v in verts:
            claimed |= 1 << v
        for v in iter_bits(claimed & ~union):
            failures.append(f"vertex {v} not attached to any centre in colour {cert.colour}")
        for v in iter_bits(union & ~claimed):
            failures.append(f"star vertex {v} missing from witness")
    if cert.order < cert.bound:
        failures.append(f"order below bound: {cert.order} < {cert.bound}")

    dia = subgraph_diameter(colouring, cert.colour, verts)
    if dia is None:
        failures.append("witness disconnected in its colour")
    elif dia > 4:
        failures.append(f"diameter exceeds 4: found {dia}")
    return VerificationReport(tuple(failures))


# --- certificate files -------------------------------------------------------

def certificate_to_json(cert: TripleStarCertificate) -> str:
    """Canonical single-line JSON; field order fixed, so output is byte-stable."""
    obj = {
        "format_version": 1,
        "mode": cert.mode,
        "n": cert.n,
        "r": cert.r,
        "bound": {"num": cert.bound.numerator, "den": cert.bound.denominator},
        "colour": cert.colour,
        "centres": list(cert.centres),
        "vertices": list(cert.vertices),
        "order": cert.order,
        "degenerate": cert.degenerate,
        "trace": {
            "centres_U": list(cert.trace.centres_U),
            "order_U": cert.trace.order_U,
            "leaf_u": cert.trace.leaf_u,
            "delta": cert.trace.delta,
        },
    }
    return json.dumps(obj, separators=(",", ":")) + "\n"


_TOP_KEYS = {"format_version", "mode", "n", "r", "bound", "colour", "centres",
             "vertices", "order", "degenerate", "trace"}
_TRACE_KEYS = {"centres_U", "order_U", "leaf_u", "delta"}


def certificate_from_json(text: str) -> TripleStarCertificate:
    """Strict structural parse; content checks stay with verify_certificate."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    if set(obj) != _TOP_KEYS:
        missing = _TOP_KEYS - set(obj)
        extra = set(obj) - _TOP_KEYS
        parts = []
        if missing:
            parts.append("missing " + ", ".join(sorted(missing)))
        if extra:
            parts.append("unknown " + ", ".join(sorted(extra)))
        raise CertificateFormatError("bad field set: " + "; ".join(parts))
    if obj["format_version"] != 1:
        raise CertificateFormatError(f"unsupported format_version: {obj['format_version']!r}")
    mode = obj["mode"]
    if not isinstance(mode, str):
        raise CertificateFormatError("mode must be a string")
    n = _int_field(obj, "n")
    r = _int_field(obj, "r")
    colour = _int_field(obj, "colour")
    order = _int_field(obj, "order")
    bound = obj["bound"]
    if (not isinstance(bound, dict) or set(bound) != {"num", "den"}
            or not isinstance(bound["num"], int) or isinstance(bound["num"], bool)
            or not isinstance(bound["den"], int) or isinstance(bound["den"], bool)
            or bound["den"] < 1):
        raise CertificateFormatError("bound must be {num, den} with integers and den >= 1")
    centres = _int_list(obj, "centres")
    vertices = _int_list(obj, "vertices")
    degenerate = obj["degenerate"]
    if not isinstance(degenerate, bool):
        raise CertificateFormatError("degenerate must be a boolean")
    trace = obj["trace"]
    if not isinstance(trace, dict) or set(trace) != _TRACE_KEYS:
        raise CertificateFormatError("trace must carry exactly centres_U, order_U, leaf_u, delta")
    centres_u = _int_list(trace, "centres_U")
    if len(centres_u) != 2:
        raise CertificateFormatError("trace.centres_U must list two centres")
    order_u = _int_field(trace, "order_U")
    delta = _int_field(trace, "delta")
    leaf = trace["leaf_u"]
    if leaf is not None and (not isinstance(leaf, int) or isinstance(leaf, bool)):
        raise CertificateFormatError("trace.leaf_u must be an integer or null")
    return TripleStarCertificate(mode, n, r, Q(bound["num"], bound["den"]), colour,
                                 centres, vertices, order, degenerate,
                                 ProofTrace((centres_u[0], centres_u[1]), order_u, leaf, delta))


def _int_field(obj: dict, key: str) -> int:
    value = obj[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise CertificateFormatError(f"{key} must be an integer")
    return value


def _int_list(obj: dict, key: str) -> tuple[int, ...]:
    value = obj[key]
    if (not isinstance(value, list)
            or any(not isinstance(v, int) or isinstance(v, bool) for v in value)):
        raise CertificateFormatError(f"{key} must be a list of integers")
    return tuple(value)
