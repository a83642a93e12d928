"""Fusion systems over finite p-groups as explicit finite categories.

A fusion system is stored extensionally: for every subgroup P of S we keep
the set of "germs" with source P, where a germ is an injective homomorphism
whose stated target equals its image. The morphism set Hom_F(P, Q) is then
the germs from P whose image lies in Q, post-composed with the inclusion.
This normal form keeps closure computations small while every predicate in
sight can still quantify over all morphisms exactly.

External definitions used here and pinned in one place:

* saturation: every fully normalized subgroup is fully automized and
  receptive (receptivity via the usual N_phi extension condition);
* weakly normal subsystem over T: saturated, T strongly closed, invariant
  under Aut_F(T), and the Frattini-type factorization Hom_F(P,T) =
  Hom_E(P,T) followed by restrictions of Aut_F(T);
* normal subsystem: weakly normal plus the extension property (every
  alpha in Aut_E(T) extends to T*C_S(T) acting on C_S(T) within Z(T));
* p-power index of D over R in F: hyp(F) <= R and O^p(Aut_F(P)) <=
  Aut_D(P) for every P <= R, with hyp(F) the subgroup generated by the
  commutators [P, O^p(Aut_F(P))];
* P is centric if every conjugate Q has C_S(Q) <= Q; P is subcentric if
  O_p(N_F(Q)) is centric for a fully normalized conjugate Q, where O_p of
  a fusion system is its largest normal subgroup.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .errors import CapExceeded, NotSaturated, NotSylow
from .groups import (
    AutGroup,
    FiniteGroup,
    GroupInjection,
    Subgroup,
    all_subgroups,
    aut_group,
    centralizer,
    center,
    conj_injection,
    mulclose,
    normalizer,
    op_residual,
    p_part,
    trivial_aut_group,
)
from .perm import Perm, sorted_elems

GERM_CAP = 100_000


class FusionSystem:
    """Category over the p-group S, germs grouped by source subgroup."""

    __slots__ = ("Sgroup", "p", "germs_by_src", "_all", "_hash", "_cache")

    def __init__(self, Sgroup: FiniteGroup, p: int, germs: Iterable[GroupInjection]):
        object.__setattr__(self, "Sgroup", Sgroup)
        object.__setattr__(self, "p", p)
        by_src: Dict[FrozenSet[Perm], set] = {}
        for g in germs:
            if g.tgt != g.image:
                g = g.as_germ()
            if not (g.src <= Sgroup.elements and g.image <= Sgroup.elements):
                raise ValueError("germ does not live inside S")
            by_src.setdefault(g.src, set()).add(g)
        object.__setattr__(
            self,
            "germs_by_src",
            {k: frozenset(v) for k, v in by_src.items()},
        )
        allg = frozenset(g for v in by_src.values() for g in v)
        object.__setattr__(self, "_all", allg)
        object.__setattr__(self, "_hash", hash((Sgroup, p, allg)))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("FusionSystem is immutable")

    # -- structure access ---------------------------------------------------

    @property
    def S(self) -> Subgroup:
        return self.Sgroup.full_subgroup()

    def subgroups(self) -> Tuple[Subgroup, ...]:
        if "subs" not in self._cache:
            self._cache["subs"] = tuple(
                Subgroup(self.Sgroup, H.elems) for H in all_subgroups(self.Sgroup)
            )
        return self._cache["subs"]

    def subgroup(self, elems: Iterable[Perm]) -> Subgroup:
        return Subgroup(self.Sgroup, frozenset(elems))

    def all_germs(self) -> FrozenSet[GroupInjection]:
        return self._all

    def germs_from(self, P: Subgroup) -> FrozenSet[GroupInjection]:
        return self.germs_by_src.get(P.elems, frozenset())

    def homs(self, P: Subgroup, Q: Subgroup) -> Tuple[GroupInjection, ...]:
        """Hom_F(P, Q): germs from P landing in Q, with target Q."""
        return tuple(
            g.with_target(Q.elems)
            for g in sorted(self.germs_from(P))
            if g.image <= Q.elems
        )

    def aut(self, P: Subgroup) -> AutGroup:
        """Aut_F(P)."""
        maps = frozenset(g for g in self.germs_from(P) if g.image == P.elems)
        return AutGroup(Subgroup(self.Sgroup, P.elems), maps)

    def aut_S(self, P: Subgroup) -> AutGroup:
        """Aut_S(P) = automorphisms induced by conjugation from N_S(P)."""
        pe = P.elems
        maps = set()
        for s in self.Sgroup.elements:
            if all(x.conj(s) in pe for x in pe):
                maps.add(conj_injection(pe, s, pe))
        return AutGroup(Subgroup(self.Sgroup, pe), frozenset(maps))

    def conjugates(self, P: Subgroup) -> Tuple[Subgroup, ...]:
        """The F-conjugacy class of P, canonically ordered."""
        images = {g.image for g in self.germs_from(P)}
        images.add(P.elems)
        return tuple(
            Subgroup(self.Sgroup, e) for e in sorted(images, key=sorted_elems)
        )

    def __eq__(self, other):
        return (
            isinstance(other, FusionSystem)
            and self.Sgroup == other.Sgroup
            and self.p == other.p
            and self._all == other._all
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "FusionSystem(|S|=%d, p=%d, germs=%d)" % (
            self.Sgroup.order,
            self.p,
            len(self._all),
        )


def subsystem_le(E: FusionSystem, F: FusionSystem) -> bool:
    """Extensional containment: E's base inside F's and every germ shared."""
    return E.Sgroup.elements <= F.Sgroup.elements and E.all_germs() <= F.all_germs()


# ---------------------------------------------------------------------------
# constructions


def fusion_of_group(G: FiniteGroup, S: Subgroup, p: int) -> FusionSystem:
    """F_S(G): morphisms are the conjugations c_g between subgroups of S."""
    if not S.elems <= G.elements:
        raise NotSylow("S is not a subgroup of G")
    if S.order != p_part(G.order, p):
        raise NotSylow(
            "order %d is not the %d-part of %d" % (S.order, p, G.order)
        )
    germs = set()
    for P in all_subgroups(S.group()):
        pe = P.elems
        for g in G.elements:
            img = frozenset(x.conj(g) for x in pe)
            if img <= S.elems:
                germs.add(conj_injection(pe, g))
    return FusionSystem(S.group(), p, germs)


def close_generated(
    S: Subgroup,
    p: int,
    generators: Iterable[GroupInjection] = (),
    cap: int = GERM_CAP,
) -> FusionSystem:
    """Smallest fusion system over S containing the generators.

    Fixed-point closure of the inner system and the generators under
    restriction, inversion of isomorphisms-onto-image, and composition.
    """
    Sg = S.group() if isinstance(S, Subgroup) else S
    germs: set = set()
    by_src: Dict[FrozenSet[Perm], set] = {}
    by_img: Dict[FrozenSet[Perm], set] = {}
    queue: List[GroupInjection] = []

    def push(g: GroupInjection):
        g = g.as_germ()
        if g in germs:
            return
        germs.add(g)
        if len(germs) > cap:
            raise CapExceeded("germ closure exceeded cap %d" % cap)
        by_src.setdefault(g.src, set()).add(g)
        by_img.setdefault(g.image, set()).add(g)
        queue.append(g)

    for P in all_subgroups(Sg):
        for s in Sg.elements:
            push(conj_injection(P.elems, s))
    for g in generators:
        if not (g.src <= Sg.elements and g.image <= Sg.elements):
            raise ValueError("generator does not live inside S")
        # validate the homomorphism property of user-supplied generators
        for x in g.src:
            for y in g.src:
                if g(x * y) != g(x) * g(y):
                    raise ValueError("generator is not a homomorphism")
        push(g)

    subs_of: Dict[FrozenSet[Perm], Tuple[FrozenSet[Perm], ...]] = {}

    def subgroup_sets(elems: FrozenSet[Perm]) -> Tuple[FrozenSet[Perm], ...]:
        if elems not in subs_of:
            subs_of[elems] = tuple(
                H.elems for H in all_subgroups(FiniteGroup(elems))
            )
        return subs_of[elems]

    while queue:
        g = queue.pop()
        push(g.inverse())
        for sub in subgroup_sets(g.src):
            if sub != g.src:
                push(g.restrict(sub))
        for h in tuple(by_src.get(g.image, ())):
            push(g.then(h))
        for h in tuple(by_img.get(g.src, ())):
            push(h.then(g))
    return FusionSystem(Sg, p, germs)


def fusion_equal(E: FusionSystem, F: FusionSystem) -> bool:
    return E == F


# ---------------------------------------------------------------------------
# K-normalizers


def K_normalizer_in_group(H: Subgroup, X: Subgroup, K: AutGroup) -> Subgroup:
    """N_H^K(X) = {h in H : X^h = X and c_h|X in K} for H inside one group."""
    xe = X.elems
    out = set()
    for h in H.elems:
        if all(x.conj(h) in xe for x in xe):
            if conj_injection(xe, h, xe) in K.maps:
                out.add(h)
    return Subgroup(H.parent, frozenset(out))


def is_fully_K_normalized(F: FusionSystem, X: Subgroup, K: AutGroup) -> bool:
    """|N_S^K(X)| >= |N_S^{K^phi}(X phi)| for every phi in Hom_F(X, S)."""
    if K.base.elems != X.elems:
        raise ValueError("K must consist of automorphisms of X")
    if not X.elems <= F.Sgroup.elements:
        raise ValueError("X is not a subgroup of S")
    S = F.S
    n0 = K_normalizer_in_group(S, X, K).order
    for phi in F.germs_from(X):
        Y = Subgroup(F.Sgroup, phi.image)
        Kphi = K.conjugate_by(phi)
        if K_normalizer_in_group(S, Y, Kphi).order > n0:
            return False
    return True


def is_fully_normalized(F: FusionSystem, X: Subgroup) -> bool:
    return is_fully_K_normalized(F, X, aut_group(X))


def is_fully_centralized(F: FusionSystem, X: Subgroup) -> bool:
    return is_fully_K_normalized(F, X, trivial_aut_group(X))


def K_normalizer_subsystem(F: FusionSystem, X: Subgroup, K: AutGroup) -> FusionSystem:
    """N_F^K(X), the fusion system over N_S^K(X) whose morphisms are exactly
    those extending to an F-morphism that sends X to X acting as a member
    of K."""
    key = ("NFK", X.elems, K.maps)
    if key in F._cache:
        return F._cache[key]
    if K.base.elems != X.elems:
        raise ValueError("K must consist of automorphisms of X")
    S0 = K_normalizer_in_group(F.S, X, K)
    sub_sets = tuple(H.elems for H in all_subgroups(S0.group()))
    xe = X.elems
    germs = set()
    for psi in F.all_germs():
        if not xe <= psi.src:
            continue
        if frozenset(psi(x) for x in xe) != xe:
            continue
        if psi.restrict(xe).with_target(xe) not in K.maps:
            continue
        for pe in sub_sets:
            if pe <= psi.src:
                r = psi.restrict(pe)
                if r.image <= S0.elems:
                    germs.add(r.as_germ())
    out = FusionSystem(S0.group(), F.p, germs)
    F._cache[key] = out
    return out


def normalizer_subsystem(F: FusionSystem, X: Subgroup) -> FusionSystem:
    """N_F(X) = N_F^{Aut(X)}(X)."""
    return K_normalizer_subsystem(F, X, aut_group(X))


def centralizer_subsystem(F: FusionSystem, X: Subgroup) -> FusionSystem:
    """C_F(X) = N_F^{{id}}(X)."""
    return K_normalizer_subsystem(F, X, trivial_aut_group(X))


# ---------------------------------------------------------------------------
# saturation


def _full_normalized_members(F: FusionSystem, cls: Tuple[Subgroup, ...]) -> Tuple[Subgroup, ...]:
    S = F.S
    best = max(normalizer(F.Sgroup, Q).order for Q in cls)
    return tuple(Q for Q in cls if normalizer(F.Sgroup, Q).order == best)


def saturation_failure(F: FusionSystem) -> Optional[dict]:
    """None if saturated, else a witness naming the failing axiom.

    Checks that every fully normalized subgroup is fully automized
    (Aut_S(P) is a Sylow p-subgroup of Aut_F(P)) and receptive (every
    isomorphism onto P extends to its N_phi).
    """
    if "sat" in F._cache:
        return F._cache["sat"]
    witness = None
    S = F.S
    for P in F.subgroups():
        cls = F.conjugates(P)
        if P not in _full_normalized_members(F, cls):
            continue
        autF = F.aut(P)
        autS = F.aut_S(P)
        if autS.order != p_part(autF.order, F.p):
            witness = {
                "axiom": "fully-automized",
                "P": P.label(),
                "aut_S": autS.order,
                "aut_F": autF.order,
            }
            break
        # receptivity
        ok = True
        for Q in cls:
            for phi in F.germs_from(Q):
                if phi.image != P.elems:
                    continue
                Nphi = _extension_control_group(F, phi, autS)
                if not _extends_over(F, phi, Nphi):
                    witness = {
                        "axiom": "receptive",
                        "P": P.label(),
                        "Q": Q.label(),
                        "phi": _map_label(phi),
                        "N_phi": Nphi.label(),
                    }
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    F._cache["sat"] = witness
    return witness


def _extension_control_group(F: FusionSystem, phi: GroupInjection, autS_P: AutGroup) -> Subgroup:
    """N_phi = {g in N_S(Q) : phi^-1 c_g phi in Aut_S(P)} for phi: Q -> P."""
    Q = Subgroup(F.Sgroup, phi.src)
    NQ = normalizer(F.Sgroup, Q)
    out = set()
    inv = phi.inverse()
    for g in NQ.elems:
        cg = conj_injection(phi.src, g, phi.src)
        if inv.then(cg).then(phi) in autS_P.maps:
            out.add(g)
    return Subgroup(F.Sgroup, frozenset(out))


def _extends_over(F: FusionSystem, phi: GroupInjection, N: Subgroup) -> bool:
    if N.elems == phi.src:
        return True
    target = phi.as_germ()
    for psi in F.germs_by_src.get(N.elems, ()):
        if psi.restrict(phi.src).as_germ() == target:
            return True
    return False


def is_saturated(F: FusionSystem) -> bool:
    return saturation_failure(F) is None


# ---------------------------------------------------------------------------
# distinguished subgroup collections


def is_strongly_closed(F: FusionSystem, T: Subgroup) -> bool:
    """No F-morphism moves a subgroup of T outside T."""
    te = T.elems
    if not te <= F.Sgroup.elements:
        raise ValueError("T is not a subgroup of S")
    for src, germs in F.germs_by_src.items():
        if src <= te:
            for g in germs:
                if not g.image <= te:
                    return False
    return True


def is_normal_in_fusion(F: FusionSystem, P: Subgroup) -> bool:
    """Every F-morphism extends to one whose source includes P and which
    maps P onto P."""
    pe = P.elems
    for src, germs in F.germs_by_src.items():
        joined = mulclose(list(src | pe), cap=F.Sgroup.order)
        for phi in germs:
            ok = False
            for psi in F.germs_by_src.get(joined, ()):
                if psi.restrict(src).as_germ() != phi:
                    continue
                if frozenset(psi(x) for x in pe) == pe:
                    ok = True
                    break
            if not ok:
                return False
    return True


def fusion_core(F: FusionSystem) -> Subgroup:
    """O_p(F): the largest subgroup normal in the fusion system."""
    if "core" in F._cache:
        return F._cache["core"]
    normals = [P for P in F.subgroups() if is_normal_in_fusion(F, P)]
    best = max(normals, key=lambda P: P.order)
    for P in normals:
        if not P.elems <= best.elems:
            raise RuntimeError(
                "normal subgroups of the fusion system do not have a "
                "unique maximum; lattice bug"
            )
    F._cache["core"] = best
    return best


def is_centric(F: FusionSystem, P: Subgroup) -> bool:
    for Q in F.conjugates(P):
        if not centralizer(F.Sgroup, Q).elems <= Q.elems:
            return False
    return True


def centric_set(F: FusionSystem) -> Tuple[Subgroup, ...]:
    """F^c, the F-centric subgroups of S."""
    if saturation_failure(F) is not None:
        raise NotSaturated("centric set requires a saturated fusion system")
    if "centric" not in F._cache:
        out = tuple(P for P in F.subgroups() if is_centric(F, P))
        _check_closure(F, out, "centric")
        F._cache["centric"] = out
    return F._cache["centric"]


def subcentric_set(F: FusionSystem) -> Tuple[Subgroup, ...]:
    """F^s: P with O_p(N_F(Q)) centric for a fully normalized conjugate Q."""
    if saturation_failure(F) is not None:
        raise NotSaturated("subcentric set requires a saturated fusion system")
    if "subcentric" not in F._cache:
        verdict: Dict[FrozenSet[Perm], bool] = {}
        out = []
        for P in F.subgroups():
            if P.elems not in verdict:
                cls = F.conjugates(P)
                rep = _full_normalized_members(F, cls)[0]
                NF = normalizer_subsystem(F, rep)
                core = fusion_core(NF)
                good = is_centric(F, Subgroup(F.Sgroup, core.elems))
                for Q in cls:
                    verdict[Q.elems] = good
            if verdict[P.elems]:
                out.append(P)
        out = tuple(out)
        _check_closure(F, out, "subcentric")
        F._cache["subcentric"] = out
    return F._cache["subcentric"]


def _check_closure(F: FusionSystem, collection: Tuple[Subgroup, ...], name: str):
    """The centric/subcentric sets must be closed under F-conjugacy and
    overgroups; a violation here is an implementation bug, not user error."""
    members = {P.elems for P in collection}
    for P in collection:
        for Q in F.conjugates(P):
            if Q.elems not in members:
                raise RuntimeError("%s set not closed under conjugacy" % name)
        for Q in F.subgroups():
            if P.elems <= Q.elems and Q.elems not in members:
                raise RuntimeError("%s set not closed under overgroups" % name)


# ---------------------------------------------------------------------------
# p-power index and normality of subsystems


def hyperfocal_subgroup(F: FusionSystem) -> Subgroup:
    """hyp(F) = < [P, O^p(Aut_F(P))] : P <= S >."""
    gens = []
    for P in F.subgroups():
        res = op_residual(F.aut(P), F.p)
        for alpha in res.maps:
            for x in P.elems:
                c = x.inv() * alpha(x)
                if not c.is_identity():
                    gens.append(c)
    if not gens:
        return F.Sgroup.trivial_subgroup()
    return Subgroup(F.Sgroup, mulclose(gens, cap=F.Sgroup.order))


def has_p_power_index(D: FusionSystem, F: FusionSystem) -> bool:
    """D over R has p-power index in F: hyp(F) <= R and O^p(Aut_F(P)) <=
    Aut_D(P) for every P <= R."""
    if not subsystem_le(D, F):
        return False
    R = D.Sgroup.elements
    if not hyperfocal_subgroup(F).elems <= R:
        return False
    for P in D.subgroups():
        PF = Subgroup(F.Sgroup, P.elems)
        if not op_residual(F.aut(PF), F.p).maps <= D.aut(P).maps:
            return False
    return True


def conjugate_fusion(E: FusionSystem, alpha: GroupInjection) -> FusionSystem:
    """E^alpha: transport every germ of E along the isomorphism alpha."""
    if not E.Sgroup.elements <= alpha.src:
        raise ValueError("alpha must be defined on the base of E")
    inv = alpha.inverse()
    germs = []
    for g in E.all_germs():
        src_moved = frozenset(alpha(x) for x in g.src)
        germs.append(inv.restrict(src_moved).then(g).then(alpha.restrict(g.image)))
    base = frozenset(alpha(x) for x in E.Sgroup.elements)
    return FusionSystem(FiniteGroup(base), E.p, germs)


def is_weakly_normal(E: FusionSystem, F: FusionSystem) -> bool:
    """Saturated + strongly closed base + Aut_F(T)-invariance + Frattini
    factorization of F-morphisms between subgroups of T."""
    if not subsystem_le(E, F):
        return False
    T = Subgroup(F.Sgroup, E.Sgroup.elements)
    if not is_strongly_closed(F, T):
        return False
    if saturation_failure(E) is not None:
        return False
    autFT = F.aut(T)
    for alpha in autFT.maps:
        if conjugate_fusion(E, alpha) != E:
            return False
    # Frattini: phi = (E-germ) then (restriction of some alpha in Aut_F(T))
    for src, germs in F.germs_by_src.items():
        if not src <= T.elems:
            continue
        for phi in germs:
            if not phi.image <= T.elems:
                continue
            if not _frattini_factors(E, autFT, phi):
                return False
    return True


def _frattini_factors(E: FusionSystem, autFT: AutGroup, phi: GroupInjection) -> bool:
    for psi in E.germs_by_src.get(phi.src, ()):
        for alpha in autFT.maps:
            if psi.then(alpha.restrict(psi.image)).as_germ() == phi:
                return True
    return False


def is_normal_subsystem(E: FusionSystem, F: FusionSystem) -> bool:
    """Weakly normal + extension property: each alpha in Aut_E(T) extends
    to T*C_S(T) moving C_S(T) only within Z(T)."""
    if not is_weakly_normal(E, F):
        return False
    T = Subgroup(F.Sgroup, E.Sgroup.elements)
    C = centralizer(F.Sgroup, T)
    P0 = mulclose(list(T.elems | C.elems), cap=F.Sgroup.order)
    Z = center(T.group())
    for alpha in E.aut(T).maps:
        found = False
        for psi in F.germs_by_src.get(P0, ()):
            if psi.restrict(T.elems).as_germ() != alpha.as_germ():
                continue
            if all(c.inv() * psi(c) in Z.elems for c in C.elems):
                found = True
                break
        if not found:
            return False
    return True


def _map_label(g: GroupInjection) -> str:
    return ";".join(
        "%s->%s" % (a, b) for a, b in g.pairs if not (a.is_identity() and b.is_identity())
    ) or "id"
