"""Closed-form cohomology of C2-surfaces, plus per-surgery rewrite rules.

``closed_form`` emits the full (unreduced) RO(C2)-graded mod-2 Bredon
cohomology of any realizable invariant profile as a decomposition over
the point module.  The answers, by kind of action:

* trivial:        M2 (+) (S(1,0)M2)^beta (+) S(2,0)M2
                  (the point module tensored with singular cohomology)
* free sphere:    (S(1,0)A0)^(beta/2) (+) A2
* free torus:     (S(1,0)A0)^((beta-2)/2) (+) A1 (+) S(1,0)A1
* nonfree, C = 0: M2 (+) (S(1,1)M2)^(F-2) (+) (S(1,0)A0)^((beta-F)/2+1)
                  (+) S(2,2)M2
* nonfree, C > 0: M2 (+) (S(1,1)M2)^(F+C-1) (+) (S(1,0)M2)^(C-1)
                  (+) (S(1,0)A0)^((beta-F)/2+1-C) (+) S(2,1)M2

The profile inequalities make every exponent a nonnegative integer.

``transform`` implements the incremental effect of a single surgery on a
closed-form-shaped decomposition, as an independent set of rewrite rules;
folding it along a word must land on ``closed_form`` of the folded
profile, which is the cross-validation the test suite runs exhaustively.
"""

from __future__ import annotations

from collections import Counter

from .bigraded import Decomposition, Summand
from .surfaces import (
    FREE_SPHERE,
    FREE_TORUS,
    TRIVIAL,
    InvariantProfile,
    Op,
    ProfileError,
    SingProfile,
    apply_op,
    validate_profile,
)

_M2 = Summand.free(0, 0)
_S10 = Summand.free(1, 0)
_S11 = Summand.free(1, 1)
_S20 = Summand.free(2, 0)
_S21 = Summand.free(2, 1)
_S22 = Summand.free(2, 2)
_A0_1 = Summand.antipodal(1, 0)


class TransformError(ValueError):
    """A rewrite rule applied to a decomposition it does not match."""


def closed_form(pr: InvariantProfile) -> Decomposition:
    """The unreduced cohomology decomposition of a valid profile."""
    validate_profile(pr)
    counts: Counter = Counter()
    beta, f, c = pr.beta, pr.fixed_points, pr.fixed_circles
    if pr.kind == TRIVIAL:
        counts[_M2] += 1
        counts[_S10] += beta
        counts[_S20] += 1
    elif pr.kind == FREE_SPHERE:
        counts[_A0_1] += beta // 2
        counts[Summand.antipodal(0, 2)] += 1
    elif pr.kind == FREE_TORUS:
        counts[_A0_1] += (beta - 2) // 2
        counts[Summand.antipodal(0, 1)] += 1
        counts[Summand.antipodal(1, 1)] += 1
    elif c == 0:
        counts[_M2] += 1
        counts[_S11] += f - 2
        counts[_A0_1] += (beta - f) // 2 + 1
        counts[_S22] += 1
    else:
        counts[_M2] += 1
        counts[_S11] += f + c - 1
        counts[_S10] += c - 1
        counts[_A0_1] += (beta - f) // 2 + 1 - c
        counts[_S21] += 1
    return Decomposition(+counts).canonicalize()


def reduced_form(pr: InvariantProfile) -> Decomposition:
    """The reduced cohomology: the unreduced answer minus one unshifted M2.

    Defined for trivial and nonfree actions only; for free actions the
    antipodal summands absorb degree zero and there is no M2 to strip.
    """
    validate_profile(pr)
    if pr.kind in (FREE_SPHERE, FREE_TORUS):
        raise ProfileError("reduced form is not defined for free actions")
    return closed_form(pr).remove(_M2)


def free_orbit_product(sing: SingProfile) -> Decomposition:
    """Cohomology of (free orbit) x Y from the singular cohomology of Y.

    A product with the free orbit only sees the underlying space:
    the answer is tau-periodic, one shifted A0 per singular class.
    """
    counts: Counter = Counter()
    counts[Summand.antipodal(0, 0)] += sing.h0
    counts[Summand.antipodal(1, 0)] += sing.h1
    counts[Summand.antipodal(2, 0)] += sing.h2
    return Decomposition(+counts)


def _free_at_result(beta_y: int, top: Summand) -> Decomposition:
    # Attaching either antitube to a free surface yields
    # M2 (+) (S(1,0)A0)^((beta+2)/2) (+) the top summand.
    counts: Counter = Counter({_M2: 1, _A0_1: (beta_y + 2) // 2, top: 1})
    return Decomposition(counts)


def transform(d_y: Decomposition, pr_y: InvariantProfile, op: Op) -> Decomposition:
    """Rewrite the decomposition of Y into that of Y-after-one-surgery.

    ``d_y`` must be in closed-form shape for ``pr_y``; ``op`` must be a
    surgery valid on ``pr_y`` (else WordError propagates).  This is a
    validation device for the closed formulas, not a general module
    functor: each rule is exactly the incremental statement proved by the
    corresponding cofiber sequence.
    """
    validate_profile(pr_y)
    apply_op(pr_y, op)          # raises WordError if the surgery is illegal
    free_kind = pr_y.kind in (FREE_SPHERE, FREE_TORUS)

    if op.token in ("CS", "DCC"):
        # Connected summing glues two conjugate copies of a punctured Y:
        # each singular 1-class of the glued surface contributes one
        # tau-periodic column in dimension one.
        extra = 1 if op.token == "DCC" else op.surface.beta
        return d_y.direct_sum(Decomposition(Counter({_A0_1: extra}))).canonicalize()

    if op.token == "AT11":
        if free_kind:
            if d_y.canonicalize() != closed_form(pr_y):
                raise TransformError("antitube rule needs the closed-form input")
            return _free_at_result(pr_y.beta, _S22).canonicalize()
        # Pinching the conjugate gluing disks wedges on an S(1,1) sphere,
        # and the remaining extension splits off a second one.
        return d_y.direct_sum(Decomposition(Counter({_S11: 2}))).canonicalize()

    if op.token == "AT10":
        if free_kind:
            if d_y.canonicalize() != closed_form(pr_y):
                raise TransformError("antitube rule needs the closed-form input")
            return _free_at_result(pr_y.beta, _S21).canonicalize()
        if pr_y.fixed_circles >= 1:
            return d_y.direct_sum(
                Decomposition(Counter({_S11: 1, _S10: 1}))).canonicalize()
        # C(Y) = 0: the new circle moves the top class from weight 2 to
        # weight 1; the pinch wedge and the nontrivial extension each
        # contribute one S(1,1)M2.
        return _swap_top(d_y, add=Counter({_S11: 2, _S21: 1})).canonicalize()

    if op.token == "FM":
        if pr_y.fixed_circles >= 1:
            return d_y.direct_sum(Decomposition(Counter({_S10: 1}))).canonicalize()
        # C(Y) = 0: trading a fixed point for a circle again rewrites the
        # top class, with a single new S(1,1)M2 from the extension.
        return _swap_top(d_y, add=Counter({_S11: 1, _S21: 1})).canonicalize()

    raise TransformError(f"no rewrite rule for op {op.token!r}")


def _swap_top(d_y: Decomposition, add: Counter) -> Decomposition:
    try:
        trimmed = d_y.remove(_S22)
    except KeyError:
        raise TransformError("rule must remove S(2,2)M2 but the input has none") from None
    return trimmed.direct_sum(Decomposition(add))
