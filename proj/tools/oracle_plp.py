#!/usr/bin/env python3
"""Oracle for the piecewise-linear program solver.

Parses the bundled .lp files with the same grammar as the C++ parser,
expands max/min nodes into DNF branches over structurally deduplicated
nodes, solves each branch LP (scipy float scan + exact Fraction simplex
confirmation), and checks the published witnesses.

Expression representation: every expression is
    affine part  +  sum_i k_i * node_i
where each node_i is a max/min node held in a pool keyed by structural
identity (so the same textual subexpression occurring twice is branched
only once) and the node arguments are again expressions of this shape.

Also used to settle a transliteration question: the printed listings for
bound-1591-1600 omit r0/s10 from the nonnegativity list and the listing
for bound-119-120 omits r0/alpha0 (printing "alpha >= 0" twice).  We
solve both readings (free vs >= 0) and compare against the published
optimum; the reading reproducing it is the one the data files use.
"""

import itertools
import os
import re
import sys
from fractions import Fraction as F

import numpy as np
from scipy.optimize import linprog

TOKEN_RE = re.compile(
    r"\s+|#[^\n]*|(>=|<=|==|:=|[-+*/();,]|\d+|[A-Za-z_][A-Za-z0-9_]*)")


def tokenize(text):
    toks, pos = [], 0
    while pos < len(text):
        m = TOKEN_RE.match(text, pos)
        if not m:
            raise SyntaxError(f"bad character at offset {pos}: {text[pos]!r}")
        if m.group(1) is not None:
            toks.append(m.group(1))
        pos = m.end()
    return toks


class Expr:
    """affine (dict var->F, const F) plus terms (dict node_id -> F)."""

    __slots__ = ("coeffs", "const", "terms")

    def __init__(self, coeffs=None, const=F(0), terms=None):
        self.coeffs = coeffs or {}
        self.const = F(const)
        self.terms = terms or {}

    def is_const(self):
        return not self.coeffs and not self.terms

    def add(self, other, sgn=1):
        c = dict(self.coeffs)
        for v, k in other.coeffs.items():
            c[v] = c.get(v, F(0)) + sgn * k
            if c[v] == 0:
                del c[v]
        t = dict(self.terms)
        for n, k in other.terms.items():
            t[n] = t.get(n, F(0)) + sgn * k
            if t[n] == 0:
                del t[n]
        return Expr(c, self.const + sgn * other.const, t)

    def scale(self, k):
        k = F(k)
        if k == 0:
            return Expr()
        return Expr({v: c * k for v, c in self.coeffs.items()},
                    self.const * k,
                    {n: c * k for n, c in self.terms.items()})

    def key(self):
        return (tuple(sorted(self.coeffs.items())), self.const,
                tuple(sorted(self.terms.items())))


class NodePool:
    def __init__(self):
        self.nodes = []  # (kind, [Expr args])
        self.index = {}  # structural key -> id

    def intern(self, kind, args):
        key = (kind, tuple(a.key() for a in args))
        if key not in self.index:
            self.index[key] = len(self.nodes)
            self.nodes.append((kind, args))
        return self.index[key]


class Parser:
    """program := ('var' IDENT ('>=' '0')? ';' | 'def' IDENT ':=' expr ';'
    | 'maximize' expr ';' | 'subject' 'to' expr ('<='|'>='|'==') expr ';')*
    with +,-,*,/ (constant divisor), max(...)/min(...), '#' comments."""

    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0
        self.pool = NodePool()
        self.vars = []  # (name, nonneg)
        self.varset = set()
        self.defs = {}
        self.objective = None
        self.constraints = []  # (lhs, op, rhs)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def eat(self, expected=None):
        t = self.peek()
        if t is None or (expected is not None and t != expected):
            raise SyntaxError(f"expected {expected!r}, got {t!r}")
        self.i += 1
        return t

    def parse(self):
        while self.peek() is not None:
            t = self.eat()
            if t == "var":
                name = self.eat()
                nonneg = False
                if self.peek() == ">=":
                    self.eat(">=")
                    if self.eat() != "0":
                        raise SyntaxError("var bounds must be '>= 0'")
                    nonneg = True
                self.eat(";")
                if name in self.varset or name in self.defs:
                    raise SyntaxError(f"duplicate name {name!r}")
                self.vars.append((name, nonneg))
                self.varset.add(name)
            elif t == "def":
                name = self.eat()
                self.eat(":=")
                if name in self.varset or name in self.defs:
                    raise SyntaxError(f"duplicate name {name!r}")
                self.defs[name] = self.expr()
                self.eat(";")
            elif t == "maximize":
                if self.objective is not None:
                    raise SyntaxError("multiple objectives")
                self.objective = self.expr()
                self.eat(";")
            elif t == "subject":
                self.eat("to")
                lhs = self.expr()
                op = self.eat()
                if op not in ("<=", ">=", "=="):
                    raise SyntaxError(f"bad comparison {op!r}")
                rhs = self.expr()
                self.eat(";")
                self.constraints.append((lhs, op, rhs))
            else:
                raise SyntaxError(f"unexpected token {t!r}")
        if self.objective is None:
            raise SyntaxError("missing objective")
        return self

    def expr(self):
        e = self.term()
        while self.peek() in ("+", "-"):
            op = self.eat()
            e = e.add(self.term(), 1 if op == "+" else -1)
        return e

    def term(self):
        e = self.factor()
        while self.peek() in ("*", "/"):
            op = self.eat()
            f = self.factor()
            if op == "*":
                if f.is_const():
                    e = e.scale(f.const)
                elif e.is_const():
                    e = f.scale(e.const)
                else:
                    raise SyntaxError("nonlinear product")
            else:
                if not f.is_const() or f.const == 0:
                    raise SyntaxError("division needs a nonzero constant divisor")
                e = e.scale(1 / f.const)
        return e

    def factor(self):
        t = self.peek()
        if t == "-":
            self.eat()
            return self.factor().scale(-1)
        if t == "(":
            self.eat()
            e = self.expr()
            self.eat(")")
            return e
        if t in ("max", "min"):
            kind = self.eat()
            self.eat("(")
            args = [self.expr()]
            while self.peek() == ",":
                self.eat(",")
                args.append(self.expr())
            self.eat(")")
            if len(args) < 2:
                raise SyntaxError(f"{kind} needs at least two arguments")
            nid = self.pool.intern(kind, args)
            return Expr(terms={nid: F(1)})
        if t is not None and t.isdigit():
            self.eat()
            return Expr(const=int(t))
        if t is not None and re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", t):
            self.eat()
            if t in self.defs:
                return self.defs[t]
            if t in self.varset:
                return Expr(coeffs={t: F(1)})
            raise SyntaxError(f"unknown identifier {t!r}")
        raise SyntaxError(f"unexpected token {t!r}")


# ---------------------------------------------------------------------------
# DNF branch enumeration over reachable pool nodes
# ---------------------------------------------------------------------------


def reachable_nodes(pool, exprs):
    seen = set()
    stack = [n for e in exprs for n in e.terms]
    while stack:
        n = stack.pop()
        if n in seen:
            continue
        seen.add(n)
        for arg in pool.nodes[n][1]:
            stack.extend(arg.terms.keys())
    return sorted(seen)


def linearize(pool, e, choice, memo):
    """Resolve node references under a branch choice to an affine Expr."""
    out = Expr(dict(e.coeffs), e.const)
    for nid, k in e.terms.items():
        if nid not in memo:
            kind, args = pool.nodes[nid]
            memo[nid] = linearize(pool, args[choice[nid]], choice, memo)
        out = out.add(memo[nid].scale(k))
    return out


def branch_programs(prog):
    pool = prog.pool
    diffs = [l.add(r, -1) for l, _, r in prog.constraints]
    nodes = reachable_nodes(pool, [prog.objective] + diffs)
    arities = [len(pool.nodes[n][1]) for n in nodes]
    for combo in itertools.product(*[range(a) for a in arities]):
        choice = dict(zip(nodes, combo))
        memo = {}
        cons = []
        for d, (_, op, _) in zip(diffs, prog.constraints):
            dlin = linearize(pool, d, choice, memo)
            if op in ("<=", "=="):
                cons.append(dlin)
            if op in (">=", "=="):
                cons.append(dlin.scale(-1))
        for nid in nodes:
            kind, args = pool.nodes[nid]
            j = choice[nid]
            aj = linearize(pool, args[j], choice, memo)
            for i, arg in enumerate(args):
                if i == j:
                    continue
                ai = linearize(pool, arg, choice, memo)
                # max: a_j >= a_i  ->  a_i - a_j <= 0 ; min flipped.
                d = ai.add(aj, -1) if kind == "max" else aj.add(ai, -1)
                cons.append(d)
        yield linearize(pool, prog.objective, choice, memo), cons


# ---------------------------------------------------------------------------
# Exact two-phase simplex (Bland's rule): max c.x s.t. Ax <= b, x >= 0
# ---------------------------------------------------------------------------


def simplex_max(A, b, c):
    m, n = len(A), len(c)
    rows = []
    basis = []
    for i in range(m):
        row = list(A[i]) + [F(0)] * m + [b[i]]
        row[n + i] = F(1)
        rows.append(row)
    # Make all right-hand sides nonnegative; note which rows then need an
    # artificial variable (their slack coefficient became -1).
    art_rows = []
    for i in range(m):
        if rows[i][-1] < 0:
            rows[i] = [-v for v in rows[i]]
            art_rows.append(i)
    ncols = n + m
    art_cols = []
    for i in art_rows:
        for r in rows:
            r.insert(-1, F(0))
        rows[i][-2] = F(1)
        art_cols.append(ncols)
        ncols += 1
    it = iter(art_cols)
    for i in range(m):
        basis.append(next(it) if i in art_rows else n + i)

    def pivot(pr, pc):
        pv = rows[pr][pc]
        rows[pr] = [v / pv for v in rows[pr]]
        for i in range(m):
            if i != pr and rows[i][pc] != 0:
                f = rows[i][pc]
                rows[i] = [a - f * p for a, p in zip(rows[i], rows[pr])]
        basis[pr] = pc

    def optimize(obj, banned):
        """Maximize sum(obj[j] x_j); Bland's rule; returns status."""
        while True:
            # Reduced cost row: z_j = obj_j - sum_i obj[basis_i] * rows[i][j]
            dual = [obj.get(basis[i], F(0)) for i in range(m)]
            enter = -1
            for j in range(ncols):
                if j in banned or j in basis:
                    continue
                rc = obj.get(j, F(0))
                rc -= sum(d * rows[i][j] for i, d in enumerate(dual) if d != 0)
                if rc > 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            best, leave = None, -1
            for i in range(m):
                if rows[i][enter] > 0:
                    q = rows[i][-1] / rows[i][enter]
                    if best is None or q < best or (q == best and
                                                    basis[i] < basis[leave]):
                        best, leave = q, i
            if leave < 0:
                return "unbounded"
            pivot(leave, enter)

    if art_cols:
        status = optimize({j: F(-1) for j in art_cols}, banned=set())
        if any(basis[i] in art_cols and rows[i][-1] != 0 for i in range(m)):
            return ("infeasible", None, None)
        for i in range(m):
            if basis[i] in art_cols:
                pc = next((j for j in range(n + m) if rows[i][j] != 0), None)
                if pc is not None:
                    pivot(i, pc)
    status = optimize({j: c[j] for j in range(n) if c[j] != 0},
                      banned=set(art_cols))
    if status == "unbounded":
        return ("unbounded", None, None)
    x = [F(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = rows[i][-1]
    return ("optimal", sum(c[j] * x[j] for j in range(n)), x)


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def solve_program(prog, override_nonneg=None):
    names = [v for v, _ in prog.vars]
    nonneg = dict(prog.vars)
    if override_nonneg:
        nonneg.update(override_nonneg)
    cols = []
    for v in names:
        cols.append((v, 1))
        if not nonneg[v]:
            cols.append((v, -1))

    def row_of(e):
        return [e.coeffs.get(v, F(0)) * s for v, s in cols], e.const

    feasible = False
    branches = 0
    cands = []
    for obj, cons in branch_programs(prog):
        branches += 1
        crow, cconst = row_of(obj)
        A, b = [], []
        for d in cons:
            r, const = row_of(d)
            A.append(r)
            b.append(-const)
        res = linprog([-float(v) for v in crow],
                      A_ub=np.array([[float(v) for v in r] for r in A]),
                      b_ub=np.array([float(v) for v in b]),
                      bounds=[(0, None)] * len(cols), method="highs")
        if res.status == 3:
            return ("unbounded", None, None, branches)
        if res.status == 0:
            feasible = True
            cands.append((-res.fun + float(cconst), crow, cconst, A, b))
    if not feasible:
        return ("infeasible", None, None, branches)
    fbest = max(v for v, *_ in cands)
    exact_best, xbest = None, None
    for v, crow, cconst, A, b in cands:
        if v < fbest - 1e-7:
            continue
        st, val, x = simplex_max(A, b, crow)
        if st == "unbounded":
            return ("unbounded", None, None, branches)
        if st != "optimal":
            continue
        val = val + cconst
        if exact_best is None or val > exact_best:
            exact_best = val
            xd = {v_: F(0) for v_ in names}
            for i, xi in enumerate(x):
                v_, s = cols[i]
                xd[v_] += s * xi
            xbest = xd
    return ("optimal", exact_best, xbest, branches)


def eval_expr(prog, e, point):
    val = sum(c * point[v] for v, c in e.coeffs.items()) + e.const
    for nid, k in e.terms.items():
        kind, args = prog.pool.nodes[nid]
        vals = [eval_expr(prog, a, point) for a in args]
        val += k * (max(vals) if kind == "max" else min(vals))
    return val


def check_witness(prog, witness, expect):
    point = {v: F(0) for v, _ in prog.vars}
    point.update({k: F(a, b) for k, (a, b) in witness.items()})
    ok = True
    for v, nn in prog.vars:
        if nn and point[v] < 0:
            print(f"    witness violates {v} >= 0")
            ok = False
    for i, (l, op, r) in enumerate(prog.constraints):
        lv, rv = eval_expr(prog, l, point), eval_expr(prog, r, point)
        good = {"<=": lv <= rv, ">=": lv >= rv, "==": lv == rv}[op]
        if not good:
            print(f"    witness violates constraint {i}: {lv} {op} {rv}")
            ok = False
    val = eval_expr(prog, prog.objective, point)
    if val != expect:
        print(f"    witness objective {val} != expected {expect}")
        ok = False
    return ok


WITNESSES = {
    "prelim2-diag": ({"d2": (1, 3), "g": (1, 6), "n": (1, 1), "f": (1, 2)},
                     F(5, 6)),
    "prelim2-offdiag": ({"d2": (1, 5), "n": (4, 5), "f": (2, 5)}, F(14, 15)),
    "bound-31-32": ({"d2": (9, 40), "g": (1, 32), "n": (67, 80),
                     "y": (-13, 60)}, F(31, 32)),
    "bound-1591-1600": ({"nu": (93, 400), "d2": (93, 400), "n": (121, 160),
                         "y": (-121, 600), "z": (-121, 200)}, F(1591, 1600)),
    "bound-119-120": ({"nu": (1, 320), "g": (1, 960), "d": (1, 192)},
                      F(119, 120)),
}


def main():
    progdir = os.path.join(os.path.dirname(__file__), "..", "data", "programs")
    all_ok = True
    for name in ["prelim2-diag", "prelim2-offdiag", "bound-31-32",
                 "bound-1591-1600", "bound-119-120"]:
        with open(os.path.join(progdir, name + ".lp")) as fh:
            prog = Parser(fh.read()).parse()
        wit, expect = WITNESSES[name]
        print(f"== {name} (expect {expect}) ==")
        wok = check_witness(prog, wit, expect)
        print(f"  witness feasible & attains: {wok}")
        st, val, x, branches = solve_program(prog)
        match = val == expect
        print(f"  solver: {st} value={val} branches={branches} match={match}")
        if not match and x is not None:
            print("  argmax:", {k: str(v) for k, v in x.items() if v != 0})
        all_ok = all_ok and wok and match
        if name == "bound-1591-1600":
            st2, val2, _, _ = solve_program(
                prog, override_nonneg={"r0": False, "s10": False})
            print(f"  variant r0,s10 free: {st2} value={val2} "
                  f"match={val2 == expect}")
        if name == "bound-119-120":
            st2, val2, _, _ = solve_program(
                prog, override_nonneg={"r0": False, "alpha0": False})
            print(f"  variant r0,alpha0 free: {st2} value={val2} "
                  f"match={val2 == expect}")
    print("ALL MATCH" if all_ok else "MISMATCH")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
