"""End-to-end checks of both directions of the characterization.

``verify_theorem15`` goes from (D, Q) to a lattice L and checks that
Con L is D with the principal congruences landing exactly on Q;
``verify_theorem13`` goes from a lattice L to a colored chain realizing
its principal congruences.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import catalog
from .coloring import (
    EXHAUSTED,
    UNSAT,
    WITNESS,
    ColoredChain,
    RepresentabilityVerdict,
    decide_chain_representable,
    extract_colored_chain,
    principal_image,
    rep_set,
)
from .congruence import ConLattice, con_lattice, is_internal, ji_congruences, principal_congruence
from .construction import (
    Assembly,
    a_,
    assemble,
    b_,
    check_compatibility,
    definition_assignment,
    glue_congruences,
)
from .order import (
    Chain,
    FiniteLattice,
    find_isomorphism,
    is_distributive,
    j_plus,
    join_irreducibles,
)


@dataclass
class Stage:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def to_json(self):
        return {"stage": self.name, "ok": self.ok, "detail": self.detail, "seconds": round(self.seconds, 4)}


@dataclass
class PipelineReport:
    name: str
    description: str = ""
    stages: list = field(default_factory=list)
    artifacts: dict = field(default_factory=dict)
    status: str = ""

    @property
    def passed(self):
        return bool(self.stages) and all(s.ok for s in self.stages)

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    def add(self, name, ok, detail="", seconds=0.0):
        self.stages.append(Stage(name, bool(ok), detail, seconds))
        return bool(ok)

    def stage(self, name):
        return next(s for s in self.stages if s.name == name)

    def to_json(self):
        return {
            "name": self.name,
            "description": self.description,
            "verdict": self.verdict,
            "status": self.status,
            "stages": [s.to_json() for s in self.stages],
            "artifacts": self.artifacts,
        }

    def summary(self):
        bad = [s.name for s in self.stages if not s.ok]
        return f"{self.verdict} {self.name}" + (f" (failed: {', '.join(bad)})" if bad else "")


class _Timer:
    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t


def congruence_map(asm: Assembly, CL: ConLattice):
    """Masks of con(a_r, b_r) per color and of their joins per element of D."""
    L, D = asm.L, asm.D
    ji = {r: CL.prime_con[L.cover_indices.index((L.idx(a_(r)), L.idx(b_(r))))].mask for r in asm.colors}
    phi = {}
    for d in D.elements:
        m = 0
        for r in asm.colors:
            if D.le(r, d):
                m |= ji[r]
        phi[d] = m
    return ji, phi


def check_isomorphism(asm: Assembly, CL: ConLattice):
    """(ji congruences are the con(a_r, b_r), r -> con(a_r, b_r) extends to D ~ Con L)."""
    ji, phi = congruence_map(asm, CL)
    found = {t.mask for t in ji_congruences(CL)}
    ji_ok = found == set(ji.values()) and len(set(ji.values())) == len(ji)
    D = asm.D
    all_masks = {t.mask for t in CL.congruences}
    bijective = set(phi.values()) == all_masks and len(set(phi.values())) == len(D)
    order_ok = all(
        D.le(x, y) == (phi[x] & ~phi[y] == 0) for x in D.elements for y in D.elements
    )
    return ji_ok, bijective and order_ok, phi


def principal_image_in_d(asm: Assembly, CL: ConLattice, phi):
    pmasks = {CL.congruence_of[x].mask for x in CL.principal}
    return {d for d, m in phi.items() if m in pmasks}


def nonfull_congruences_internal(L: FiniteLattice, CL: ConLattice):
    for t in CL.congruences:
        if t.is_identity or t.is_full:
            continue
        if not is_internal(L, t):
            return False
    return True


def gluing_oracle(asm: Assembly):
    """For each r < 1: the glued component congruences equal con_L(a_r, b_r)."""
    out = {}
    for r in asm.colors:
        if r == asm.unit:
            continue
        asg = definition_assignment(asm, r)
        ok = check_compatibility(asm, asg) and glue_congruences(asm, asg) == principal_congruence(asm.L, a_(r), b_(r))
        out[r] = ok
    return out


def trivial_lattice(D: FiniteLattice) -> FiniteLattice:
    """A lattice representing a D with at most two elements."""
    return Chain(["o", "i"][: len(D)] if len(D) == 2 else ["o"])


def verify_theorem15(D: FiniteLattice, Q, max_len=None, name="theorem15", chain: ColoredChain | None = None, oracle=True):
    Q = set(Q)
    rep = PipelineReport(name, f"|D|={len(D)}, Q={sorted(Q, key=D.index.__getitem__)}")
    P = join_irreducibles(D)
    pre = is_distributive(D) and (len(D) == 1 or D.one in P) and j_plus(D) <= Q <= set(D.elements)
    if not rep.add("preconditions", pre, "D distributive, unit join-irreducible, J+(D) within Q"):
        rep.status = "PreconditionViolated"
        return rep

    with _Timer() as tm:
        if chain is None:
            verdict = decide_chain_representable(D, Q, max_len)
        else:
            got = rep_set(chain, D)
            verdict = RepresentabilityVerdict(WITNESS if got == Q else UNSAT, chain if got == Q else None,
                                              None if got == Q else "given chain does not realize Q", chain.length)
    rep.status = verdict.status
    rep.artifacts["chain_decision"] = verdict.to_json()
    if not rep.add("chain_decision", verdict.status == WITNESS, verdict.status, tm.seconds):
        return rep

    with _Timer() as tm:
        if len(D) <= 2:
            asm = None
            L = trivial_lattice(D)
        else:
            asm = assemble(verdict.witness, D)
            L = asm.L
    rep.artifacts["L_size"] = len(L)
    rep.artifacts["L_covers"] = len(L.cover_indices)
    rep.add("assembly", True, f"|L|={len(L)}", tm.seconds)

    with _Timer() as tm:
        CL = con_lattice(L)
        if asm is None:
            iso = find_isomorphism(CL.lattice, D)
            ok_iso = iso is not None
            image = {iso[x] for x in CL.principal} if ok_iso else set()
            ji_ok = True
        else:
            ji_ok, ok_iso, phi = check_isomorphism(asm, CL)
            image = principal_image_in_d(asm, CL, phi)
    rep.add("ji_congruences", ji_ok, "J(Con L) = {con(a_r, b_r)}", tm.seconds)
    rep.add("con_isomorphism", ok_iso, "r -> con(a_r, b_r) extends to D ~ Con L")
    rep.artifacts["principal_image"] = sorted(image, key=D.index.__getitem__)
    rep.add("principal_image", image == Q, "principal congruences correspond to Q")
    rep.add("internal_or_full", nonfull_congruences_internal(L, CL), "non-internal nonzero congruences are full")

    if oracle and asm is not None:
        with _Timer() as tm:
            res = gluing_oracle(asm)
        rep.artifacts["gluing_oracle"] = res
        rep.add("gluing_oracle", all(res.values()), "glued congruence = con(a_r, b_r)", tm.seconds)
    rep.artifacts["lattice"] = L
    rep.artifacts["assembly"] = asm
    rep.artifacts["con"] = CL
    return rep


def verify_theorem13(L: FiniteLattice, name="theorem13", CL: ConLattice | None = None):
    rep = PipelineReport(name, f"|L|={len(L)}")
    if not rep.add("preconditions", len(L) >= 2, "|L| >= 2"):
        return rep
    with _Timer() as tm:
        CL = CL or con_lattice(L)
        ex = extract_colored_chain(L, CL)
        got = rep_set(ex.colored, CL.lattice)
        want = principal_image(CL)
    rep.artifacts["chain_length"] = ex.colored.length
    rep.artifacts["maximal_chains"] = len(ex.components)
    rep.status = "PASS" if got == want else "FAIL"
    rep.add("rep_equals_princ", got == want, f"Rep C has {len(got)} elements, Princ L {len(want)}", tm.seconds)
    return rep


def _public(rep):
    for key in ("lattice", "assembly", "con"):
        rep.artifacts.pop(key, None)
    return rep


def regression_known_results(max_base=4):
    """Known representability results on the standard catalog."""
    reports = []
    for k, D in enumerate(catalog.ji_unit_catalog(max_base)):
        reports.append(_public(verify_theorem15(D, set(D.elements), name=f"Q=D #{k} |D|={len(D)}")))
        reports.append(_public(verify_theorem15(D, j_plus(D), name=f"Q=J+(D) #{k} |D|={len(D)}")))

    B3 = catalog.b3()
    Q = {B3.zero, B3.one} | set(join_irreducibles(B3))
    v = decide_chain_representable(B3, Q)
    rep = PipelineReport("B3 with Q = {0, atoms, 1}", "expected: not representable")
    rep.status = v.status
    rep.artifacts["chain_decision"] = v.to_json()
    rep.add("certified_unsat", v.status == UNSAT, v.certificate or "")
    reports.append(rep)

    two = catalog.two_chain()
    reports.append(_public(verify_theorem15(two, {"0", "1"}, name="2-element D")))

    D, colors, Q = catalog.rep_example()
    v = decide_chain_representable(D, Q)
    rep = PipelineReport("join-reducible unit: Q = D - {a+d}", "unit join-reducible; chain decision only")
    rep.status = v.status
    rep.artifacts["chain_decision"] = v.to_json()
    rep.add("chain_witness", v.status == WITNESS and rep_set(v.witness, D) == Q, v.status)
    reports.append(rep)
    return reports


def exit_code(status):
    return {WITNESS: 0, "PASS": 0, UNSAT: 1, "FAIL": 1, EXHAUSTED: 2}.get(status, 1)
