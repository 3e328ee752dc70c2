"""Command-line front end.

Problem files are JSON; polynomial payloads are strings in the grammar of
the parser module. Every command emits a single JSON document (stable key
order, so identical inputs give byte-identical output except the elapsed_ms
field) and exits 0 when the command completed (the verdict lives inside the
JSON), 2 on input errors, 3 on resource limits.

Certificates are always integer polynomials. Over Q and Z localized at p
the identity carries an integer "denominator" D: the cofactors satisfy
sum cofactor_j * generator_j = D * target (a unit in the ring at hand), so
exact re-verification never needs rational arithmetic.
"""

import argparse
import json
import sys
import time

from .bounds import audit, beta, e_level_bound, flat_bound, mono_count
from .domains import GF, QQ, ZZ, domain_for_tag
from .errors import InputError, InvariantViolation, ResourceLimit, SchemaError
from .field_solver import solve_inhomogeneous_field, syzygy_field
from .global_solver import (
    _clear_vector_z,
    _den_lcm_q,
    _poly_q_to_z,
    bezout_local,
    bezout_z,
    member_z,
    module_colon,
    module_intersect,
    module_saturate,
    solve_linear_z,
    syzygy_z,
)
from .linalg import PolyMatrix
from .local_solver import combine_generators, syzygy_local
from .oracle import member_bounded_z, syzygy_bounded_z
from .poly import Polynomial, height_q, reduce_mod_p
from .text import format_polynomial, parse_polynomial


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise SchemaError(f"{path} must hold a JSON object")
    return data


def _problem_nvars(data):
    nv = data.get("nvars")
    if not isinstance(nv, int) or nv < 0:
        raise SchemaError("problem needs an integer field 'nvars' >= 0")
    return nv


def _ring_setup(data, args):
    tag = args.ring or data.get("ring", "Z")
    prime = args.prime if args.prime is not None else data.get("prime")
    if prime is not None and (not isinstance(prime, int) or prime < 2):
        raise SchemaError("'prime' must be an integer >= 2")
    dom = domain_for_tag(tag, prime)
    return tag, prime, dom


def _parse_poly(text, nv, dom=None):
    if not isinstance(text, str):
        raise SchemaError("polynomials must be strings in the documented grammar")
    return parse_polynomial(text, nv, dom)


def _parse_list(data, key, nv, dom=None):
    raw = data.get(key)
    if not isinstance(raw, list) or not raw:
        raise SchemaError(f"problem needs a non-empty list field '{key}'")
    return [_parse_poly(t, nv, dom) for t in raw]


def _parse_target(data, nv, dom=None):
    raw = data.get("target")
    if raw is None:
        raise SchemaError("problem needs a field 'target'")
    return _parse_poly(raw, nv, dom)


def _parse_matrix(data, nv, dom=None):
    raw = data.get("matrix")
    if not isinstance(raw, list) or not raw:
        raise SchemaError("problem needs a non-empty list field 'matrix'")
    rows = []
    width = None
    base = dom if dom is not None else ZZ
    for r in raw:
        if not isinstance(r, list) or not r:
            raise SchemaError("'matrix' must be a list of non-empty rows")
        if width is None:
            width = len(r)
        elif len(r) != width:
            raise SchemaError("'matrix' rows have mixed lengths")
        rows.append([_parse_poly(t, nv, dom) for t in r])
    return PolyMatrix(base, nv, rows)


def _parse_vectors(data, key, nv):
    """Module generators: each entry a polynomial string or a list of them."""
    raw = data.get(key)
    if not isinstance(raw, list) or not raw:
        raise SchemaError(f"problem needs a non-empty list field '{key}'")
    out = []
    mdim = None
    for entry in raw:
        vec = [entry] if isinstance(entry, str) else entry
        if not isinstance(vec, list) or not vec:
            raise SchemaError(f"'{key}' entries must be strings or non-empty lists")
        if mdim is None:
            mdim = len(vec)
        elif len(vec) != mdim:
            raise SchemaError(f"'{key}' entries have mixed ambient dimensions")
        out.append([_parse_poly(t, nv) for t in vec])
    return out


def _fmt_vec(vec):
    return [format_polynomial(f) for f in vec]


def _max_degree(polys):
    top = None
    for f in polys:
        if f.terms:
            d = f.degree()
            top = d if top is None else max(top, d)
    return top


def _height_dict(polys):
    h = height_q([f for f in polys if f.dom in (ZZ, QQ)])
    return {"den_lcm": str(h.den_lcm), "max_abs": str(h.max_abs), "log": h.log_value}


def _witness(reason):
    if reason is None:
        return None
    if reason == "rank over Q":
        return "not solvable over Q"
    if reason.startswith("no solution over the integers localized at "):
        p = reason.rsplit(" ", 1)[1]
        return f"mod-p obstruction p={p}"
    return reason


def _clear_field_solution(yq):
    """Rational solution -> (integer cofactors, integer denominator)."""
    den = _den_lcm_q(yq)
    return [_poly_q_to_z(f, den) for f in yq], den


def _combined_generators_zp(A, p):
    """Generators of the solutions of A y = 0 over Z localized at p, with
    provenance labels."""
    fb = syzygy_field(A.to_domain(QQ))
    field_gens = []
    for y in fb.gens:
        z = _clear_vector_z(y)
        if any(f.terms for f in z):
            field_gens.append(z)
    lb = syzygy_local(A, p)
    gens = combine_generators(field_gens, lb)
    provenance = ["field"] * len(field_gens) + [f"local:{p}"] * (len(gens) - len(field_gens))
    return gens, provenance, lb


def _solve_zp(A, b, p):
    """One solution of A y = b over Z localized at p as (cofactors, D) with
    A y = D b and p not dividing D, or (None, witness)."""
    n = A.nc
    nv = A.nvars
    yq = solve_inhomogeneous_field(A.to_domain(QQ), [f.to_domain(QQ) for f in b])
    if yq is None:
        return None, "not solvable over Q"
    H = PolyMatrix(ZZ, nv, [list(A.rows[i]) + [-b[i]] for i in range(A.m)])
    gens, _, _ = _combined_generators_zp(H, p)
    last = [g[n] for g in gens]
    loc = bezout_local(last, p)
    if loc is None:
        return None, f"mod-p obstruction p={p}"
    y = []
    for j in range(n):
        acc = Polynomial.zero(ZZ, nv)
        for k, g in enumerate(gens):
            if loc.cofactors[k].terms and g[j].terms:
                acc = acc + loc.cofactors[k] * g[j]
        y.append(acc)
    got = A.mul_vec(y)
    want = [f.scale(loc.denominator) for f in b]
    if any((u - w).terms for u, w in zip(got, want)):
        raise InvariantViolation("local solution failed its scaling identity")
    return (y, loc.denominator), None


def _audit_report(nv, d, m, n, inputs, field_deg, local_deg, outputs, trace=None):
    h_in = height_q(inputs)
    h_out = height_q(outputs)
    report = audit(
        nv, max(d if d is not None else 1, 1), max(m, 1), n,
        h_in.log_value, field_deg, local_deg, h_out.log_value,
        trace=trace,
    )
    return report.to_dict()


def _certificate_dict(mode, cofactors, den, target=None, generators=None,
                      matrix=None, rhs=None):
    out = {"mode": mode, "cofactors": [format_polynomial(g) for g in cofactors]}
    if den is not None:
        out["denominator"] = str(den)
    if target is not None:
        out["target"] = format_polynomial(target)
    if generators is not None:
        out["generators"] = [format_polynomial(f) for f in generators]
    if matrix is not None:
        out["matrix"] = [[format_polynomial(f) for f in row] for row in matrix.rows]
    if rhs is not None:
        out["rhs"] = [format_polynomial(f) for f in rhs]
    return out


def cmd_member(args):
    data = _load_json(args.problem)
    nv = _problem_nvars(data)
    tag, prime, dom = _ring_setup(data, args)
    result = {"command": "member", "ring": tag, "nvars": nv}
    if prime is not None:
        result["prime"] = prime

    if tag == "Fp":
        target = _parse_target(data, nv, dom)
        gens = _parse_list(data, "generators", nv, dom)
        A = PolyMatrix(dom, nv, [list(gens)])
        y = solve_inhomogeneous_field(A, [target])
        if y is None:
            result.update(verdict="not-member", witness=f"rank over F_{prime}",
                          certificate=None, degrees={"certificate": None})
            return result
        cert = _certificate_dict("membership", y, None, target=target, generators=gens)
        result.update(verdict="member", witness=None, certificate=cert,
                      degrees={"certificate": _max_degree(y)})
        return result

    target = _parse_target(data, nv)
    gens = _parse_list(data, "generators", nv)

    cof = None
    if tag == "Z":
        cert, reason = member_z(target, gens, explain=True)
        if cert is None:
            result.update(verdict="not-member", witness=_witness(reason),
                          certificate=None, degrees={"certificate": None})
            return result
        cof = cert.cofactors
        cdict = _certificate_dict("membership", cof, 1,
                                  target=target, generators=gens)
        result.update(verdict="member", witness=None, certificate=cdict,
                      degrees={"certificate": _max_degree(cof)},
                      height=_height_dict(cof))
    elif tag == "Q":
        A = PolyMatrix(QQ, nv, [[f.to_domain(QQ) for f in gens]])
        yq = solve_inhomogeneous_field(A, [target.to_domain(QQ)])
        if yq is None:
            result.update(verdict="not-member", witness="not solvable over Q",
                          certificate=None, degrees={"certificate": None})
            return result
        cof, den = _clear_field_solution(yq)
        cdict = _certificate_dict("membership", cof, den, target=target, generators=gens)
        result.update(verdict="member", witness=None, certificate=cdict,
                      degrees={"certificate": _max_degree(cof)},
                      height=_height_dict(cof))
    elif tag == "Zp":
        A = PolyMatrix(ZZ, nv, [list(gens)])
        if target.is_zero():
            got, why = ([Polynomial.zero(ZZ, nv)] * len(gens), 1), None
        else:
            got, why = _solve_zp(A, [target], prime)
        if got is None:
            result.update(verdict="not-member", witness=why,
                          certificate=None, degrees={"certificate": None})
            return result
        cof, den = got
        cdict = _certificate_dict("membership", cof, den, target=target, generators=gens)
        result.update(verdict="member", witness=None, certificate=cdict,
                      degrees={"certificate": _max_degree(cof)},
                      height=_height_dict(cof))
    else:
        raise InputError(f"member does not support ring {tag}")

    if args.audit and cof is not None:
        d_in = _max_degree([target] + gens)
        result["bounds"] = _audit_report(
            nv, d_in, 1, len(gens), [target] + gens, None, None, cof,
        )
    return result


def cmd_solve(args):
    data = _load_json(args.problem)
    nv = _problem_nvars(data)
    tag, prime, dom = _ring_setup(data, args)
    result = {"command": "solve", "ring": tag, "nvars": nv}
    if prime is not None:
        result["prime"] = prime

    if tag == "Fp":
        A = _parse_matrix(data, nv, dom)
        b = _parse_list(data, "rhs", nv, dom)
        y = solve_inhomogeneous_field(A, b)
        if y is None:
            result.update(verdict="not-solvable", witness=f"rank over F_{prime}",
                          certificate=None, degrees={"certificate": None})
            return result
        cert = _certificate_dict("linear-system", y, None, matrix=A, rhs=b)
        result.update(verdict="solvable", witness=None, certificate=cert,
                      degrees={"certificate": _max_degree(y)})
        return result

    A = _parse_matrix(data, nv)
    b = _parse_list(data, "rhs", nv)
    if len(b) != A.m:
        raise SchemaError("'rhs' length must match the matrix row count")

    cof = None
    if tag == "Z":
        cert, reason = solve_linear_z(A, b, explain=True)
        if cert is None:
            result.update(verdict="not-solvable", witness=_witness(reason),
                          certificate=None, degrees={"certificate": None})
            return result
        cof = cert.cofactors
        cdict = _certificate_dict("linear-system", cof, 1, matrix=A, rhs=b)
        result.update(verdict="solvable", witness=None, certificate=cdict,
                      degrees={"certificate": _max_degree(cof)},
                      height=_height_dict(cof))
    elif tag == "Q":
        yq = solve_inhomogeneous_field(A.to_domain(QQ), [f.to_domain(QQ) for f in b])
        if yq is None:
            result.update(verdict="not-solvable", witness="not solvable over Q",
                          certificate=None, degrees={"certificate": None})
            return result
        cof, den = _clear_field_solution(yq)
        cdict = _certificate_dict("linear-system", cof, den, matrix=A, rhs=b)
        result.update(verdict="solvable", witness=None, certificate=cdict,
                      degrees={"certificate": _max_degree(cof)},
                      height=_height_dict(cof))
    elif tag == "Zp":
        if all(not f.terms for f in b):
            got, why = ([Polynomial.zero(ZZ, nv)] * A.nc, 1), None
        else:
            got, why = _solve_zp(A, b, prime)
        if got is None:
            result.update(verdict="not-solvable", witness=why,
                          certificate=None, degrees={"certificate": None})
            return result
        cof, den = got
        cdict = _certificate_dict("linear-system", cof, den, matrix=A, rhs=b)
        result.update(verdict="solvable", witness=None, certificate=cdict,
                      degrees={"certificate": _max_degree(cof)},
                      height=_height_dict(cof))
    else:
        raise InputError(f"solve does not support ring {tag}")

    if args.audit and cof is not None:
        d_in = _max_degree([f for row in A.rows for f in row] + b)
        result["bounds"] = _audit_report(
            nv, d_in, A.m, A.nc,
            [f for row in A.rows for f in row] + b, None, None, cof,
        )
    return result


def cmd_syzygy(args):
    data = _load_json(args.problem)
    nv = _problem_nvars(data)
    tag, prime, dom = _ring_setup(data, args)
    result = {"command": "syzygy", "ring": tag, "nvars": nv}
    if prime is not None:
        result["prime"] = prime

    if tag in ("Q", "Fp"):
        A = _parse_matrix(data, nv, dom if tag == "Fp" else None)
        work = A if tag == "Fp" else A.to_domain(QQ)
        fb = syzygy_field(work)
        if tag == "Q":
            gens = []
            for y in fb.gens:
                z = _clear_vector_z(y)
                if any(f.terms for f in z):
                    gens.append(z)
        else:
            gens = [y for y in fb.gens if any(f.terms for f in y)]
        result.update(
            generators=[_fmt_vec(y) for y in gens],
            provenance=["field"] * len(gens),
            delta=None,
            count=len(gens),
            degrees={"max": _max_degree([f for y in gens for f in y])},
        )
        if args.audit:
            d_in = _max_degree([f for row in A.rows for f in row])
            result["bounds"] = _audit_report(
                nv, d_in, A.m, A.nc,
                [f for row in A.rows for f in row] if tag == "Q" else [],
                _max_degree([f for y in gens for f in y]), None,
                [f for y in gens for f in y] if tag == "Q" else [],
            )
        return result

    A = _parse_matrix(data, nv)
    if tag == "Z":
        basis = syzygy_z(A)
        gens, provenance = basis.gens, basis.provenance
        delta = basis.delta
        trace = {str(p): recs for p, recs in basis.records.items()}
    elif tag == "Zp":
        gens, provenance, lb = _combined_generators_zp(A, prime)
        delta = None
        trace = {str(prime): lb.records}
    else:
        raise InputError(f"syzygy does not support ring {tag}")

    result.update(
        generators=[_fmt_vec(y) for y in gens],
        provenance=provenance,
        delta=str(delta) if delta is not None else None,
        count=len(gens),
        degrees={"max": _max_degree([f for y in gens for f in y])},
        height=_height_dict([f for y in gens for f in y]),
    )
    if args.audit:
        d_in = _max_degree([f for row in A.rows for f in row])
        field_polys = [f for y, pr in zip(gens, provenance) if pr == "field" for f in y]
        local_polys = [f for y, pr in zip(gens, provenance) if pr != "field" for f in y]
        result["bounds"] = _audit_report(
            nv, d_in, A.m, A.nc,
            [f for row in A.rows for f in row],
            _max_degree(field_polys), _max_degree(local_polys),
            [f for y in gens for f in y],
            trace=trace,
        )
    return result


def cmd_bezout(args):
    data = _load_json(args.problem)
    nv = _problem_nvars(data)
    tag, prime, dom = _ring_setup(data, args)
    result = {"command": "bezout", "ring": tag, "nvars": nv}
    if prime is not None:
        result["prime"] = prime

    if tag == "Fp":
        gens = _parse_list(data, "generators", nv, dom)
        A = PolyMatrix(dom, nv, [list(gens)])
        y = solve_inhomogeneous_field(A, [Polynomial.one(dom, nv)])
        if y is None:
            result.update(verdict="not-unit", certificate=None)
            return result
        cert = _certificate_dict("bezout", y, None,
                                 target=Polynomial.one(dom, nv), generators=gens)
        result.update(verdict="unit", certificate=cert,
                      degrees={"certificate": _max_degree(y)})
        return result

    gens = _parse_list(data, "generators", nv)
    one = Polynomial.one(ZZ, nv)
    if tag == "Z":
        cert = bezout_z(gens)
        if cert is None:
            result.update(verdict="not-unit", certificate=None)
            return result
        cdict = _certificate_dict("bezout", cert.cofactors, 1, target=one, generators=gens)
        cof = cert.cofactors
    elif tag == "Q":
        A = PolyMatrix(QQ, nv, [[f.to_domain(QQ) for f in gens]])
        yq = solve_inhomogeneous_field(A, [Polynomial.one(QQ, nv)])
        if yq is None:
            result.update(verdict="not-unit", certificate=None)
            return result
        cof, den = _clear_field_solution(yq)
        cdict = _certificate_dict("bezout", cof, den, target=one, generators=gens)
    elif tag == "Zp":
        loc = bezout_local(gens, prime)
        if loc is None:
            result.update(verdict="not-unit", certificate=None)
            return result
        cof = loc.cofactors
        cdict = _certificate_dict("bezout", cof, loc.denominator,
                                  target=one, generators=gens)
    else:
        raise InputError(f"bezout does not support ring {tag}")

    result.update(verdict="unit", certificate=cdict,
                  degrees={"certificate": _max_degree(cof)},
                  height=_height_dict(cof))
    return result


def _require_ring_z(tag, command):
    if tag != "Z":
        raise InputError(f"{command} is defined over Z only; got ring {tag}")


def cmd_intersect(args):
    data = _load_json(args.problem)
    nv = _problem_nvars(data)
    tag, _, _ = _ring_setup(data, args)
    _require_ring_z(tag, "intersect")
    gens_a = _parse_vectors(data, "generators", nv)
    gens_b = _parse_vectors(data, "generators_b", nv)
    out = module_intersect(gens_a, gens_b)
    return {
        "command": "intersect", "ring": tag, "nvars": nv,
        "generators": [_fmt_vec(v) for v in out],
        "count": len(out),
        "degrees": {"max": _max_degree([f for v in out for f in v])},
    }


def cmd_colon(args):
    data = _load_json(args.problem)
    nv = _problem_nvars(data)
    tag, _, _ = _ring_setup(data, args)
    _require_ring_z(tag, "colon")
    gens_mprime = _parse_vectors(data, "generators", nv)
    gens_m = _parse_vectors(data, "generators_b", nv)
    out = module_colon(gens_mprime, gens_m, nvars=nv)
    return {
        "command": "colon", "ring": tag, "nvars": nv,
        "generators": [format_polynomial(a) for a in out],
        "count": len(out),
        "degrees": {"max": _max_degree(out)},
    }


def cmd_saturate(args):
    data = _load_json(args.problem)
    nv = _problem_nvars(data)
    tag, _, _ = _ring_setup(data, args)
    _require_ring_z(tag, "saturate")
    gens = _parse_vectors(data, "generators", nv)
    out = module_saturate(gens)
    return {
        "command": "saturate", "ring": tag, "nvars": nv,
        "generators": [_fmt_vec(v) for v in out],
        "count": len(out),
        "degrees": {"max": _max_degree([f for v in out for f in v])},
    }


def cmd_bounds(args):
    N, d, m = args.nvars, args.deg, args.rows
    out = {
        "command": "bounds", "N": N, "d": d, "m": m,
        "beta": str(beta(N, d, m)),
        "flat": str(flat_bound(N, d, m)),
        "e_levels": [str(e_level_bound(nu, N, d, m)) for nu in range(N + 1)],
        "mono_count": str(mono_count(N, d)),
    }
    return out


def cmd_oracle_member(args):
    data = _load_json(args.problem)
    nv = _problem_nvars(data)
    tag, _, _ = _ring_setup(data, args)
    _require_ring_z(tag, "oracle-member")
    target = _parse_target(data, nv)
    gens = _parse_list(data, "generators", nv)
    got = member_bounded_z(target, gens, args.bound)
    result = {"command": "oracle-member", "ring": tag, "nvars": nv,
              "bound": args.bound}
    if got is None:
        result.update(verdict="absent", certificate=None)
    else:
        cdict = _certificate_dict("membership", got, 1, target=target, generators=gens)
        result.update(verdict="present", certificate=cdict,
                      degrees={"certificate": _max_degree(got)})
    return result


def cmd_oracle_syzygy(args):
    data = _load_json(args.problem)
    nv = _problem_nvars(data)
    tag, _, _ = _ring_setup(data, args)
    _require_ring_z(tag, "oracle-syzygy")
    A = _parse_matrix(data, nv)
    basis = syzygy_bounded_z(A, args.bound)
    return {
        "command": "oracle-syzygy", "ring": tag, "nvars": nv,
        "bound": args.bound,
        "generators": [_fmt_vec(y) for y in basis],
        "count": len(basis),
        "degrees": {"max": _max_degree([f for y in basis for f in y])},
    }


def _cert_int(value, name):
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            raise SchemaError(f"certificate field '{name}' must be an integer")
    raise SchemaError(f"certificate field '{name}' must be an integer")


def verify_certificate(problem, certificate):
    """Exact re-multiplication check of a certificate JSON against a problem.

    Returns True or False; raises SchemaError when either document does not
    match the documented schema. Independent of solver internals: the check
    is a direct polynomial identity.
    """
    if not isinstance(problem, dict) or not isinstance(certificate, dict):
        raise SchemaError("problem and certificate must be JSON objects")
    nv = _problem_nvars(problem)
    tag = problem.get("ring", "Z")
    prime = problem.get("prime")
    mode = certificate.get("mode", "membership")
    raw_cof = certificate.get("cofactors")
    if not isinstance(raw_cof, list):
        raise SchemaError("certificate needs a list field 'cofactors'")
    den = _cert_int(certificate.get("denominator", 1), "denominator")
    if den == 0:
        return False
    cof = [_parse_poly(t, nv) for t in raw_cof]

    if mode == "linear-system":
        raw_matrix = certificate.get("matrix", problem.get("matrix"))
        raw_rhs = certificate.get("rhs", problem.get("rhs"))
        if not isinstance(raw_matrix, list) or not isinstance(raw_rhs, list):
            raise SchemaError("linear-system verification needs 'matrix' and 'rhs'")
        rows = [[_parse_poly(t, nv) for t in r] for r in raw_matrix]
        rhs = [_parse_poly(t, nv) for t in raw_rhs]
        if any(len(r) != len(cof) for r in rows) or len(rhs) != len(rows):
            raise SchemaError("certificate dimensions do not match the system")
        A = PolyMatrix(ZZ, nv, rows)
        got = A.mul_vec(cof)
        want = [f.scale(den) for f in rhs]
        diffs = [g - w for g, w in zip(got, want)]
    elif mode in ("membership", "bezout"):
        raw_gens = certificate.get("generators", problem.get("generators"))
        if not isinstance(raw_gens, list):
            raise SchemaError("membership verification needs 'generators'")
        raw_target = certificate.get("target", problem.get("target"))
        if raw_target is None and mode == "bezout":
            raw_target = "1"
        if raw_target is None:
            raise SchemaError("membership verification needs 'target'")
        gens = [_parse_poly(t, nv) for t in raw_gens]
        target = _parse_poly(raw_target, nv)
        if len(gens) != len(cof):
            raise SchemaError("certificate cofactor count does not match the generators")
        acc = Polynomial.zero(ZZ, nv)
        for g, f in zip(cof, gens):
            acc = acc + g * f
        diffs = [acc - target.scale(den)]
    else:
        raise SchemaError(f"unknown certificate mode {mode!r}")

    if tag == "Fp":
        if prime is None:
            raise SchemaError("ring Fp needs 'prime' in the problem")
        return all(reduce_mod_p(f, prime).is_zero() for f in diffs)
    if tag == "Zp":
        if prime is None:
            raise SchemaError("ring Zp needs 'prime' in the problem")
        if den % prime == 0:
            return False
    return all(f.is_zero() for f in diffs)


def cmd_verify(args):
    problem = _load_json(args.problem)
    payload = _load_json(args.certificate)
    certificate = payload.get("certificate", payload)
    if certificate is None:
        raise SchemaError("no certificate found in the supplied document")
    ok = verify_certificate(problem, certificate)
    return {"command": "verify", "verdict": "pass" if ok else "fail"}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polyz",
        description="Exact linear algebra over Z[X1..XN]: membership "
                    "certificates, syzygies, module operations, degree bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, problem=True, certificate=False, bound=False):
        p = sub.add_parser(name)
        if problem:
            p.add_argument("problem", help="path to a JSON problem file")
        if certificate:
            p.add_argument("certificate", help="path to a JSON certificate file")
        if bound:
            p.add_argument("--bound", type=int, required=True,
                           help="degree bound B for the truncated search")
        p.add_argument("--ring", choices=["Z", "Q", "Fp", "Zp"], default=None,
                       help="override the problem file ring tag")
        p.add_argument("--prime", type=int, default=None,
                       help="prime for rings Fp and Zp")
        p.add_argument("--audit", action="store_true",
                       help="attach a degree-bound report")
        p.add_argument("--out", default=None, help="write the JSON here instead of stdout")
        p.set_defaults(func=fn)
        return p

    add("member", cmd_member)
    add("solve", cmd_solve)
    add("syzygy", cmd_syzygy)
    add("bezout", cmd_bezout)
    add("intersect", cmd_intersect)
    add("colon", cmd_colon)
    add("saturate", cmd_saturate)
    add("oracle-member", cmd_oracle_member, bound=True)
    add("oracle-syzygy", cmd_oracle_syzygy, bound=True)
    add("verify", cmd_verify, certificate=True)

    pb = sub.add_parser("bounds")
    pb.add_argument("--nvars", type=int, required=True)
    pb.add_argument("--deg", type=int, required=True)
    pb.add_argument("--rows", type=int, required=True)
    pb.add_argument("--out", default=None)
    pb.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        result = args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result["elapsed_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
