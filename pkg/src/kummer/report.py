"""Verdict assembly: turn a curvature into a classification report.

:func:`classify` runs the Galois pipeline on a curvature R, re-verifies
every witness it is about to emit by exact substitution, and packs the
verdicts into a :class:`ClassificationReport`. The report is plain data;
:func:`render_report` serializes it as human-readable text or as a flat,
byte-stable JSON object, and :func:`report_from_json` inverts the JSON
form.

Verdicts come in three flavors. Booleans answer the two structural
questions that are always decidable here (pullback integrability and
diagonal action). Three-valued strings ("yes", "no", "undetermined")
answer the questions that the rational-certificate search can leave open,
which happens exactly in the dihedral case.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import VerificationError
from .galois import GaloisClass, kovacic_classify, lie_irreducible
from .grammar import parse_expression, parse_ratfunc, render_ratfunc
from .groupoid import (
    LinearODE,
    ProjectiveStructure,
    affine_operator,
    lie_operator,
    verify_affine_reduction,
)
from .poles import rational_poles
from .ratfunc import RatFunc

__all__ = [
    "PROJECTIVE_IMAGES",
    "AffineReduction",
    "ClassificationReport",
    "classify",
    "render_report",
    "report_from_json",
]

# Image of each Galois class in the projective group.
PROJECTIVE_IMAGES = {
    "projectively_trivial": "trivial",
    "torus_finite": "finite_cyclic",
    "torus_infinite": "infinite_torus_image",
    "borel_full": "borel_image",
    "dihedral": "dihedral_image",
    "tetrahedral": "a4",
    "octahedral": "s4",
    "icosahedral": "a5",
    "full_sl2": "full_psl2",
}

_FINITE_IMAGES = frozenset({"trivial", "finite_cyclic", "a4", "s4", "a5"})


@dataclass(frozen=True)
class AffineReduction:
    """Witness that the structure descends to an affine one.

    ``u`` solves u' + u^2 + R/2 = 0, ``r = -2u`` is the induced connection
    coefficient with R = r' - r^2/2, and ``operator`` is the second-order
    symmetry operator a'' + r a' + r' a of the reduced structure.
    """

    u: RatFunc
    r: RatFunc
    operator: LinearODE


@dataclass(frozen=True)
class ClassificationReport:
    input: str
    galois_class: str
    projective_image: str
    integrable_pullback: bool
    integrable_isogeny: str
    affine_subgroupoid: AffineReduction | None
    minimal: str
    n_minimal_all_n: bool
    product_rigidity: bool
    acts_diagonally: bool
    rational_sym2_basis: tuple[RatFunc, ...] | None
    # Full engine output for programmatic callers. Not serialized and not
    # part of equality, so JSON round trips compare clean without it.
    certificate: GaloisClass | None = field(default=None, compare=False, repr=False)


def _as_structure(R) -> ProjectiveStructure:
    if isinstance(R, ProjectiveStructure):
        return R
    return ProjectiveStructure(RatFunc.make(R))


def classify(R, variable: str = "x") -> ClassificationReport:
    """Classify the structure with curvature ``R``.

    ``R`` may be a RatFunc, a bare constant, or a ProjectiveStructure;
    ``variable`` only names the indeterminate in the rendered report.
    Raises UnsupportedPolesError when the denominator of R does not split
    over the rationals, and VerificationError if any internal witness
    fails to re-verify (a bug, never a property of the input).
    """
    structure = _as_structure(R)
    curvature = structure.curvature
    rational_poles(curvature)

    cert = kovacic_classify(structure)
    image = PROJECTIVE_IMAGES[cert.tag]

    basis: tuple[RatFunc, ...] | None = None
    if len(cert.sym2_basis) == 3:
        lie = lie_operator(structure)
        for b in cert.sym2_basis:
            if not lie.apply(b).is_zero:
                raise VerificationError(
                    "symmetric-square basis element fails the third-order equation"
                )
        basis = cert.sym2_basis
    pullback = basis is not None
    if pullback != (image == "trivial"):
        raise VerificationError(
            "symmetric-square dimension disagrees with the computed image"
        )

    if image in _FINITE_IMAGES:
        isogeny = "yes"
    elif cert.tag == "dihedral":
        isogeny = "undetermined"
    else:
        isogeny = "no"

    witness: AffineReduction | None = None
    if cert.riccati.count_class in ("one", "two", "infinite"):
        u = cert.riccati.solutions[0]
        reduction = verify_affine_reduction(structure, u)
        witness = AffineReduction(
            u=u,
            r=reduction.connection_coefficient,
            operator=affine_operator(reduction),
        )

    if lie_irreducible(cert):
        minimal = "yes"
    elif cert.tag == "dihedral":
        minimal = "undetermined"
    else:
        minimal = "no"

    if pullback and isogeny != "yes":
        raise VerificationError("pullback verdict without a finite image")
    if minimal == "yes" and witness is not None:
        raise VerificationError("irreducible image next to an affine witness")
    if minimal == "no" and witness is None:
        raise VerificationError("reducible non-dihedral image without a witness")

    return ClassificationReport(
        input=render_ratfunc(curvature, variable),
        galois_class=cert.tag,
        projective_image=image,
        integrable_pullback=pullback,
        integrable_isogeny=isogeny,
        affine_subgroupoid=witness,
        minimal=minimal,
        n_minimal_all_n=minimal == "yes",
        product_rigidity=image != "trivial",
        acts_diagonally=pullback,
        rational_sym2_basis=basis,
        certificate=cert,
    )


def _report_variable(rep: ClassificationReport) -> str:
    _, variable = parse_expression(rep.input)
    return variable


def report_payload(rep: ClassificationReport) -> dict:
    """The report as a JSON-ready dict, field order fixed."""
    variable = _report_variable(rep)
    witness = None
    if rep.affine_subgroupoid is not None:
        w = rep.affine_subgroupoid
        witness = {
            "u": render_ratfunc(w.u, variable),
            "r": render_ratfunc(w.r, variable),
            "operator": [
                render_ratfunc(c, variable) for c in w.operator.coefficients
            ],
        }
    basis = None
    if rep.rational_sym2_basis is not None:
        basis = [render_ratfunc(b, variable) for b in rep.rational_sym2_basis]
    return {
        "input": rep.input,
        "galois_class": rep.galois_class,
        "projective_image": rep.projective_image,
        "integrable_pullback": rep.integrable_pullback,
        "integrable_isogeny": rep.integrable_isogeny,
        "affine_subgroupoid": witness,
        "minimal": rep.minimal,
        "n_minimal_all_n": rep.n_minimal_all_n,
        "product_rigidity": rep.product_rigidity,
        "acts_diagonally": rep.acts_diagonally,
        "rational_sym2_basis": basis,
    }


_VERDICT_WORDS = {True: "Yes", False: "No"}
_THREE_WORDS = {"yes": "Yes", "no": "No", "undetermined": "Undetermined"}


def _text_lines(rep: ClassificationReport) -> list[str]:
    variable = _report_variable(rep)
    lines = [
        f"input: {rep.input}",
        f"galois_class: {rep.galois_class}",
        f"projective_image: {rep.projective_image}",
    ]

    if rep.integrable_pullback:
        lines.append(
            "integrable_pullback: Yes (pullback criterion: the symmetric-square"
            " equation has a full rational solution basis)"
        )
    else:
        lines.append(
            "integrable_pullback: No (pullback criterion: the symmetric-square"
            " equation has no full rational solution basis)"
        )

    isogeny_reason = {
        "yes": "the projective image is finite",
        "no": "the projective image is infinite",
        "undetermined": "dihedral image; finiteness is not decided over the rationals",
    }[rep.integrable_isogeny]
    lines.append(
        f"integrable_isogeny: {_THREE_WORDS[rep.integrable_isogeny]}"
        f" (isogeny criterion: {isogeny_reason})"
    )

    if rep.affine_subgroupoid is None:
        lines.append("affine_subgroupoid: none")
    else:
        w = rep.affine_subgroupoid
        coeffs = ", ".join(
            render_ratfunc(c, variable) for c in w.operator.coefficients
        )
        lines.append(
            f"affine_subgroupoid: u = {render_ratfunc(w.u, variable)};"
            f" r = {render_ratfunc(w.r, variable)};"
            f" operator coefficients [{coeffs}]"
        )

    if rep.minimal == "yes":
        lines.append("minimal: Yes (Lie-irreducible projective image)")
    elif rep.minimal == "undetermined":
        lines.append(
            "minimal: Undetermined (dihedral image: an invariant line pair"
            " exists, but a rational affine reduction is not decided)"
        )
    elif rep.projective_image == "trivial":
        lines.append(
            "minimal: No (trivial projective image; any proper algebraic"
            " subgroup induces a proper subgroupoid)"
        )
    else:
        w = rep.affine_subgroupoid
        lines.append(
            f"minimal: No (rational Riccati solution"
            f" u = {render_ratfunc(w.u, variable)};"
            f" affine reduction r = {render_ratfunc(w.r, variable)})"
        )

    lines.append(
        f"n_minimal_all_n: {_VERDICT_WORDS[rep.n_minimal_all_n]}"
        " (follows from the minimality verdict)"
    )
    if rep.product_rigidity:
        lines.append(
            "product_rigidity: Yes (rigidity criterion: simple fiber algebra"
            " and nontrivial image)"
        )
    else:
        lines.append(
            "product_rigidity: No (rigidity criterion: the projective image"
            " is trivial)"
        )
    lines.append(
        f"acts_diagonally: {_VERDICT_WORDS[rep.acts_diagonally]}"
        " (diagonal-action criterion: equivalent to the pullback verdict)"
    )

    if rep.rational_sym2_basis is None:
        lines.append("rational_sym2_basis: none")
    else:
        rendered = ", ".join(
            render_ratfunc(b, variable) for b in rep.rational_sym2_basis
        )
        lines.append(f"rational_sym2_basis: {rendered}")

    if rep.certificate is not None and rep.certificate.notes:
        lines.append("notes: " + "; ".join(rep.certificate.notes))
    return lines


def render_report(rep: ClassificationReport, format: str = "text") -> str:
    """Serialize a report. ``format`` is "text" or "json".

    The JSON form is a flat, compact, single-line object with a fixed
    field order, so identical inputs produce byte-identical output. The
    text form adds one diagnostic ``notes:`` line when the engine has
    recorded any (aborted certificate hunts, exhausted case lists).
    """
    if format == "json":
        return json.dumps(report_payload(rep), separators=(",", ":"))
    if format == "text":
        return "\n".join(_text_lines(rep)) + "\n"
    raise ValueError(f"unknown report format {format!r}")


def report_from_json(text: str) -> ClassificationReport:
    """Rebuild a report from its JSON rendering."""
    data = json.loads(text)
    witness = None
    if data["affine_subgroupoid"] is not None:
        w = data["affine_subgroupoid"]
        witness = AffineReduction(
            u=parse_ratfunc(w["u"]),
            r=parse_ratfunc(w["r"]),
            operator=LinearODE.make(tuple(parse_ratfunc(c) for c in w["operator"])),
        )
    basis = None
    if data["rational_sym2_basis"] is not None:
        basis = tuple(parse_ratfunc(b) for b in data["rational_sym2_basis"])
    return ClassificationReport(
        input=data["input"],
        galois_class=data["galois_class"],
        projective_image=data["projective_image"],
        integrable_pullback=data["integrable_pullback"],
        integrable_isogeny=data["integrable_isogeny"],
        affine_subgroupoid=witness,
        minimal=data["minimal"],
        n_minimal_all_n=data["n_minimal_all_n"],
        product_rigidity=data["product_rigidity"],
        acts_diagonally=data["acts_diagonally"],
        rational_sym2_basis=basis,
    )
