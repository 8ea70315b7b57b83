"""
Analysis pipeline: validate, twins, quotient chain, co-twins, group
structure, det and dist, with optional oracle cross-checks.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import config
from core.autgroup import (enumerate_automorphisms, group_order, kappa_kernel_check, kappa_surjectivity,
                           orbit_stabilizer_check, twin_action_check)
from core.circulant import CirculantSpec, GraphSource, resolve
from core.cotwins import detect_cotwins, nonadjacent_view, recognize_crown
from core.errors import InvariantViolation, LimitExceededError
from core.graph import Graph
from core.symmetry import SymmetryEngine, SymmetryReport
from core.twins import (TwinKind, chains_are_complementary, complement_chain, detect_twins,
                        detect_twins_generic, quotient_sequence)

logger = logging.getLogger(__name__)


@dataclass
class Claim:
    """One formula value checked against an independent computation"""
    claim: str
    method: str
    formula: object
    oracle: object
    ok: bool

    def to_dict(self) -> Dict:
        return {
            "claim": self.claim,
            "method": self.method,
            "formula": self.formula,
            "oracle": self.oracle,
            "ok": self.ok,
        }


@dataclass
class ReportDocument:
    input: Dict
    twins: Dict
    cotwins: Dict
    quotient_chain: Dict
    group: Dict
    symmetry: Dict
    verification: Optional[List[Claim]] = None
    tool: Dict = field(default_factory=config.get_config_summary)

    @property
    def mismatches(self) -> List[Claim]:
        return [c for c in self.verification or [] if not c.ok]

    @property
    def disagreements(self) -> List[str]:
        """Measures whose formula value an exhaustive search contradicted"""
        return [name for name in ("det", "dist") if (self.symmetry.get(name) or {}).get("confirmed") is False]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.disagreements

    def to_dict(self) -> Dict:
        data = {
            "schema": config.EXPORT_CONFIG["json_schema"],
            "input": self.input,
            "twins": self.twins,
            "cotwins": self.cotwins,
            "quotient_chain": self.quotient_chain,
            "group": self.group,
            "symmetry": self.symmetry,
        }
        if self.verification is not None:
            data["verification"] = {
                "ok": self.ok,
                "claims": [c.to_dict() for c in self.verification],
            }
        data["tool"] = self.tool
        return data


def describe_input(graph: Graph, spec: Optional[CirculantSpec], label: Optional[str] = None) -> Dict:
    data = {"order": graph.order, "edges": graph.edge_count}
    if spec is not None:
        data.update({
            "graph_spec": spec.name,
            "canonical": spec.canonical,
            "connection_set": list(spec.connection_set.members),
            "connected": spec.connected,
            "bipartite": spec.bipartite,
        })
    else:
        data.update({"graph_spec": label or f"G_{graph.order}", "connected": graph.is_connected(),
                     "bipartite": graph.is_bipartite()})
    return data


class SymmetryAnalyzer:
    """Runs the full pipeline for one graph and assembles a report document"""

    def __init__(self, mode: Optional[str] = None, verify: bool = False):
        self.logger = logging.getLogger(__name__)
        self.engine = SymmetryEngine(mode)
        self.verify = verify

    def cotwin_section(self, source: GraphSource) -> Dict:
        partition = detect_twins(source)
        if partition.kind is not TwinKind.NONE:
            return {"kind": None, "skipped": "graph has twins"}
        pairing = detect_cotwins(source)
        section = pairing.to_dict()
        if pairing.is_positive:
            section["k"] = pairing.k
            view, _, _, complemented = nonadjacent_view(source)
            section["via_complement"] = complemented
            section["triangle_free"] = not view.has_triangle()
            crown = recognize_crown(view) if section["triangle_free"] else None
            section["crown"] = crown.to_dict() if crown is not None else None
        return section

    def analyze(self, source: GraphSource, label: Optional[str] = None) -> ReportDocument:
        graph, spec = resolve(source)
        name = spec.name if spec is not None else (label or f"G_{graph.order}")
        try:
            self.logger.info(f"Analyzing {name}")
            partition = detect_twins(source)
            chain = quotient_sequence(source)
            cotwins = self.cotwin_section(source)
            report = self.engine.analyze(source)
            document = ReportDocument(
                input=describe_input(graph, spec, label),
                twins=partition.to_dict(),
                cotwins=cotwins,
                quotient_chain=chain.to_dict(),
                group=report.structure.to_dict(),
                symmetry=self._symmetry_section(report),
            )
            if self.verify:
                document.verification = self.verification(source, report)
                if document.mismatches:
                    self.logger.error(f"{name}: {len(document.mismatches)} claim(s) failed verification")
            return document
        except Exception as e:
            self.logger.error(f"Error analyzing {name}: {e}")
            raise

    def _symmetry_section(self, report: SymmetryReport) -> Dict:
        data = report.to_dict()
        data.pop("group", None)
        return data

    # -- verification ----------------------------------------------------------

    def verification(self, source: GraphSource, report: Optional[SymmetryReport] = None) -> List[Claim]:
        """Structural values against the oracle, formulas against exhaustive search"""
        graph, spec = resolve(source)
        report = report or self.engine.analyze(source)
        claims: List[Claim] = []

        oracle_order = group_order(graph)
        claims.append(Claim("group_order", report.structure.provenance, report.order, oracle_order,
                            report.order == oracle_order))
        orbit = orbit_stabilizer_check(graph)
        claims.append(Claim("orbit_stabilizer", "oracle", orbit["order"],
                            orbit["orbit_size"] * orbit["stabilizer_order"], orbit["ok"]))

        for name, measure in (("det", report.det), ("dist", report.dist)):
            if measure.exhaustive_value is not None:
                formula = measure.value if measure.is_exact else [measure.lo, measure.hi]
                claims.append(Claim(name, measure.method, formula, measure.exhaustive_value,
                                    bool(measure.confirmed)))

        if spec is not None:
            coset = detect_twins(spec)
            generic = detect_twins_generic(graph)
            same = coset.kind is generic.kind and set(coset.classes) == set(generic.classes)
            claims.append(Claim("twin_detection", "coset", coset.kind.value, generic.kind.value, same))

        chain = quotient_sequence(source)
        co_chain = complement_chain(source)
        claims.append(Claim("complement_chain", "quotient", len(chain), len(co_chain),
                            chains_are_complementary(chain, co_chain)))

        claims.extend(self._action_claims(source, graph))
        for claim in claims:
            level = logging.DEBUG if claim.ok else logging.WARNING
            self.logger.log(level, f"verify {claim.claim}: {claim.formula} vs {claim.oracle}")
        return claims

    def _action_claims(self, source: GraphSource, graph: Graph) -> List[Claim]:
        try:
            automorphisms = enumerate_automorphisms(graph, limit=config.ORACLE_CONFIG["exhaustive_group_limit"])
        except LimitExceededError as e:
            self.logger.warning(f"Skipping action checks: {e}")
            return []
        claims = []
        partition = detect_twins(source)
        if partition.kind is not TwinKind.NONE:
            check = twin_action_check(graph, partition, automorphisms)
            claims.append(Claim("twin_action_kernel", "twins", check["expected_kernel"], check["kernel_size"],
                                check["kernel_ok"] and check["well_defined"] and check["homomorphism_ok"]))
            if partition.is_uniform:
                claims.append(Claim("twin_action_image", "twins", check["quotient_order"], check["image_size"],
                                    check["surjective"]))
            return claims

        pairing = detect_cotwins(source)
        if not pairing.is_positive or not pairing.covers:
            return claims
        view, _, view_pairing, _ = nonadjacent_view(source)
        try:
            kernel_ok = kappa_kernel_check(view, view_pairing, automorphisms)
        except InvariantViolation as e:
            self.logger.warning(f"Co-twin swap check failed: {e}")
            kernel_ok = False
        claims.append(Claim("cotwin_kernel", "cotwins", 2, "id and swap" if kernel_ok else "other", kernel_ok))
        # onto exactly when triangle-free
        expected = not view.has_triangle()
        surjective = kappa_surjectivity(view, view_pairing, automorphisms)
        claims.append(Claim("cotwin_pair_action", "crown" if expected else "StabAut",
                            "onto" if expected else "not onto", "onto" if surjective else "not onto",
                            surjective == expected))
        return claims


def analyze(source: GraphSource, mode: Optional[str] = None, verify: bool = False,
            label: Optional[str] = None) -> ReportDocument:
    return SymmetryAnalyzer(mode, verify).analyze(source, label)
