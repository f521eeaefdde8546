"""Ground-truth nodal solver.

Assembles each measuring circuit in conductance form (INF resistances are
exactly 0 siemens, 0-ohm resistors collapse their two nodes) and solves the
resulting 2x2 or 3x3 system by Gaussian elimination with partial pivoting.
This module knows nothing about the closed-form table expressions; it is the
independent oracle they are tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .model import (
    BjtLoads,
    BjtParams,
    IllPosedError,
    MosLoads,
    MosParams,
    Quantity,
    Resistance,
)

GND = "gnd"


@dataclass(frozen=True)
class Topology:
    """One measuring circuit: nodes, loads, drive and output terminals.

    loads maps a load-set field name to the pair of nodes it sits between.
    drive is ("v", node) for a unit voltage source (gains) or ("i", node)
    for a unit test current (impedances); out is the node whose voltage is
    the answer.
    """

    nodes: tuple[str, ...]
    loads: dict[str, tuple[str, str]]
    drive: tuple[str, str]
    out: str


_BJT_NODES = ("b", "e", "c")
_MOS_NODES = ("g", "s", "d")

TOPOLOGIES: dict[Quantity, Topology] = {
    Quantity.AV_CE: Topology(_BJT_NODES, {"r_e": ("e", GND), "r_c": ("c", GND), "r_f": ("b", "c")}, ("v", "b"), "c"),
    Quantity.AV_CC: Topology(_BJT_NODES, {"r_e": ("e", GND), "r_c": ("c", GND), "r_f": ("b", "c")}, ("v", "b"), "e"),
    Quantity.AV_CB: Topology(_BJT_NODES, {"r_b": ("b", GND), "r_c": ("c", GND), "r_f": ("b", "c")}, ("v", "e"), "c"),
    Quantity.R_BASE: Topology(_BJT_NODES, {"r_e": ("e", GND), "r_c": ("c", GND), "r_f": ("b", "c")}, ("i", "b"), "b"),
    Quantity.R_EMITTER: Topology(_BJT_NODES, {"r_b": ("b", GND), "r_c": ("c", GND), "r_f": ("b", "c")}, ("i", "e"), "e"),
    Quantity.R_COLLECTOR: Topology(_BJT_NODES, {"r_b": ("b", GND), "r_e": ("e", GND), "r_f": ("b", "c")}, ("i", "c"), "c"),
    Quantity.AV_CS: Topology(_MOS_NODES, {"r_s": ("s", GND), "r_d": ("d", GND), "r_f": ("g", "d")}, ("v", "g"), "d"),
    Quantity.AV_CD: Topology(_MOS_NODES, {"r_s": ("s", GND), "r_d": ("d", GND), "r_f": ("g", "d")}, ("v", "g"), "s"),
    Quantity.AV_CG: Topology(_MOS_NODES, {"r_g": ("g", GND), "r_d": ("d", GND), "r_f": ("g", "d")}, ("v", "s"), "d"),
    Quantity.R_GATE: Topology(_MOS_NODES, {"r_s": ("s", GND), "r_d": ("d", GND), "r_f": ("g", "d")}, ("i", "g"), "g"),
    Quantity.R_SOURCE: Topology(_MOS_NODES, {"r_g": ("g", GND), "r_d": ("d", GND), "r_f": ("g", "d")}, ("i", "s"), "s"),
    Quantity.R_DRAIN: Topology(_MOS_NODES, {"r_g": ("g", GND), "r_s": ("s", GND), "r_f": ("g", "d")}, ("i", "d"), "d"),
}


def _device_elements(q: Quantity, p: BjtParams | MosParams):
    """Intrinsic branches: resistors [(n1, n2, R)] and VCCSs [(sink, src, c+, c-, g)].

    A VCCS entry drives a current g*(v[c+] - v[c-]) out of `sink` and into
    `src` (for the bipolar device the collector current g_m*v_be leaves the
    collector node through the device and re-enters at the emitter).
    """
    if q.is_mos:
        assert isinstance(p, MosParams)
        resistors = [("d", "s", p.ro)]
        vccs = [("d", "s", "g", "s", p.gm)]
        if p.gmb != 0.0:
            # back gate: current gmb*v_bs with the body at ground
            vccs.append(("d", "s", GND, "s", p.gmb))
        return resistors, vccs
    assert isinstance(p, BjtParams)
    resistors = [("b", "e", p.r_pi), ("c", "e", p.ro)]
    vccs = [("c", "e", "b", "e", p.gm)]
    return resistors, vccs


class _Groups:
    """Union-find over node names; 0-ohm branches merge their endpoints."""

    def __init__(self, nodes):
        self._parent = {n: n for n in nodes}
        self._parent[GND] = GND

    def find(self, n: str) -> str:
        p = self._parent
        while p[n] != n:
            p[n] = p[p[n]]
            n = p[n]
        return n

    def merge(self, a: str, b: str):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # keep GND as the canonical representative when it participates
        if rb == GND:
            ra, rb = rb, ra
        self._parent[rb] = ra


def _members(groups: _Groups, nodes, root: str) -> str:
    names = [n for n in nodes if groups.find(n) == root]
    return "/".join(names)


def _check_ground_reachable(groups: _Groups, nodes, resistors, vccs,
                            extra_edges):
    """Every node group must reach ground through current-carrying branches.

    Finite nonzero resistors and controlled sources are branches; a voltage
    drive contributes a virtual branch to ground (passed in extra_edges).  A
    component cut off from ground has linearly dependent KCL rows, which
    float assembly would only expose as a rounding-sized pivot.
    """
    parent: dict[str, str] = {}

    def find(x: str) -> str:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: str, b: str):
        ra, rb = find(groups.find(a)), find(groups.find(b))
        if ra != rb:
            parent[rb] = ra

    find(groups.find(GND))
    for n in nodes:
        find(groups.find(n))
    for n1, n2, r in resistors:
        if not r.is_inf:
            union(n1, n2)
    for sink, src, _cp, _cn, g in vccs:
        if g != 0.0:
            union(sink, src)
    for a, b in extra_edges:
        union(a, b)

    gnd_comp = find(groups.find(GND))
    for n in nodes:
        if find(groups.find(n)) != gnd_comp:
            raise IllPosedError(
                f"node {_members(groups, nodes, groups.find(n))} has no "
                "current path to ground; the circuit is ill-posed")


def _int_matrix(n: int, contribs, rhs_contribs):
    """Scale all stamped conductances to a common power-of-two denominator.

    Every IEEE double is an exact dyadic rational, so the whole system
    (matrix and right-hand side together) becomes an integer one without
    any rounding; scaling both sides by the same constant leaves the
    solution untouched.
    """
    denom = 1
    for _i, _j, g in contribs:
        denom = max(denom, g.as_integer_ratio()[1])
    for _i, g in rhs_contribs:
        denom = max(denom, g.as_integer_ratio()[1])
    a = [[0] * n for _ in range(n)]
    r = [0] * n
    for i, j, g in contribs:
        num, d = g.as_integer_ratio()
        a[i][j] += num * (denom // d)
    for i, g in rhs_contribs:
        num, d = g.as_integer_ratio()
        r[i] += num * (denom // d)
    return a, r


def _det(a) -> int:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))


def _solve_component(n: int, contribs, rhs_contribs, out_idx: int,
                     labels) -> float:
    """Exact solve for a single solution component.

    The integer system is solved by Cramer's rule (cofactor expansion is
    exact division-free elimination at this size), so the only rounding in
    the whole oracle is the final correctly-rounded conversion of the
    rational answer to a double.  A determinant of exactly zero is the
    precise criterion for an ill-posed load combination.
    """
    a, r = _int_matrix(n, contribs, rhs_contribs)
    for col in range(n):
        if all(a[row][col] == 0 for row in range(n)):
            raise IllPosedError(
                f"singular nodal system: node {labels[col]} is floating "
                "(no DC path constrains it)")
    det = _det(a)
    if det == 0:
        raise IllPosedError(
            "singular nodal system: the loads leave the circuit without a "
            "unique solution")
    a_out = [row[:] for row in a]
    for row in range(n):
        a_out[row][out_idx] = r[row]
    return float(Fraction(_det(a_out), det))


def _solve(q: Quantity, p, loads_map: dict[str, Resistance]) -> float:
    topo = TOPOLOGIES[q]
    resistors, vccs = _device_elements(q, p)
    for field, (n1, n2) in topo.loads.items():
        resistors.append((n1, n2, loads_map[field]))

    groups = _Groups(topo.nodes)
    for n1, n2, r in resistors:
        if r.ohms == 0.0:
            groups.merge(n1, n2)

    mode, drive_node = topo.drive
    drive_root = groups.find(drive_node)
    out_root = groups.find(topo.out)
    gnd_root = groups.find(GND)

    if mode == "v":
        if drive_root == gnd_root:
            raise IllPosedError(
                f"input node {_members(groups, topo.nodes, drive_root)} is "
                "shorted to ground; the driving source sees a contradiction")
        known = {gnd_root: 0.0, drive_root: 1.0}
        _check_ground_reachable(groups, topo.nodes, resistors, vccs,
                                [(drive_node, GND)])
    else:
        if drive_root == gnd_root:
            return 0.0  # probe shorted straight to ground
        known = {gnd_root: 0.0}
        _check_ground_reachable(groups, topo.nodes, resistors, vccs, [])

    unknown_roots = []
    for n in topo.nodes:
        r = groups.find(n)
        if r not in known and r not in unknown_roots:
            unknown_roots.append(r)
    if not unknown_roots:
        # everything pinned by the source/shorts
        return known.get(out_root, 0.0) if mode == "v" else known[out_root]

    idx = {r: i for i, r in enumerate(unknown_roots)}
    n = len(unknown_roots)
    contribs: list[tuple[int, int, float]] = []
    rhs_contribs: list[tuple[int, float]] = []

    def stamp(row_node: str, col_node: str, g: float):
        # adds g * v[col] to the KCL row of row_node
        rr = groups.find(row_node)
        if rr not in idx:
            return
        cr = groups.find(col_node)
        if cr in idx:
            contribs.append((idx[rr], idx[cr], g))
        else:
            v = known[cr]
            if v != 0.0:
                rhs_contribs.append((idx[rr], -g * v))

    for n1, n2, r in resistors:
        if r.ohms == 0.0 or groups.find(n1) == groups.find(n2):
            continue
        g = r.conductance
        if g == 0.0:
            continue
        stamp(n1, n1, g)
        stamp(n1, n2, -g)
        stamp(n2, n2, g)
        stamp(n2, n1, -g)

    for sink, src, cpos, cneg, g in vccs:
        if groups.find(cpos) == groups.find(cneg) or g == 0.0:
            continue
        stamp(sink, cpos, g)
        stamp(sink, cneg, -g)
        stamp(src, cpos, -g)
        stamp(src, cneg, g)

    if mode == "i":
        # 1 A test current, so the probed voltage equals the impedance
        rhs_contribs.append((idx[groups.find(drive_node)], 1.0))

    labels = [_members(groups, topo.nodes, r) for r in unknown_roots]

    if out_root in known:
        # the answer is pinned; still reject systems with no unique solution
        _solve_component(n, contribs, rhs_contribs, 0, labels)
        return known[out_root]
    return _solve_component(n, contribs, rhs_contribs, idx[out_root], labels)


def solve_bjt(q: Quantity, p: BjtParams, loads: BjtLoads) -> float:
    """Solve the bipolar nodal equations for one quantity.

    Returns the gain (dimensionless) or impedance (ohms) as the exact
    solution of the assembled linear system.  Raises IllPosedError when the
    load combination leaves a node floating.
    """
    if q.is_mos:
        raise ValueError(f"{q} is a MOS quantity; use solve_mos")
    loads_map = {"r_e": loads.r_e, "r_b": loads.r_b, "r_c": loads.r_c, "r_f": loads.r_f}
    return _solve(q, p, loads_map)


def solve_mos(q: Quantity, p: MosParams, loads: MosLoads) -> float:
    """Solve the MOS nodal equations for one quantity.

    The gate draws no current; the channel current is
    gm*v_gs - gmb*v_s + (v_d - v_s)/ro with the body grounded.  For R_GATE
    and R_SOURCE with r_d = INF and gmb > 0 the ground-referenced probe is
    rejected as ill-posed: the gate-source impedance those probes are meant
    to characterize depends on the body tie, which the open drain removes.
    """
    if not q.is_mos:
        raise ValueError(f"{q} is a bipolar quantity; use solve_bjt")
    if q in (Quantity.R_GATE, Quantity.R_SOURCE) and loads.r_d.is_inf and p.gmb != 0.0:
        raise IllPosedError(
            f"{q.name} with r_d = INF and gmb > 0 is ill-defined: the open "
            "drain leaves the body-referenced measurement without meaning")
    loads_map = {"r_s": loads.r_s, "r_g": loads.r_g, "r_d": loads.r_d, "r_f": loads.r_f}
    res = _solve(q, p, loads_map)
    if math.isnan(res):
        raise IllPosedError(f"{q.name}: solution is indeterminate for these loads")
    return res
