"""End-to-end runs over the shipped experimental items."""
from __future__ import annotations

from dataclasses import dataclass

from .f0 import F0Params, synthesize
from .fixtures import load_fixture
from .measure import Row, classify_boost, classify_initial_lowering, format_table, measure_descents, measure_rises
from .spmh import ProsodicTree, project
from .tree import SyntacticTree
from .wellformedness import ConstraintConfig, apply_all


def prosodic_structure(tree: SyntacticTree, cfg: ConstraintConfig | None = None) -> ProsodicTree:
    return apply_all(project(tree), cfg)


@dataclass
class ExperimentReport:
    lowering: list[Row]
    boost: list[Row]

    @property
    def all_yes(self) -> bool:
        return all(r.verdict for r in self.lowering + self.boost)

    def to_text(self) -> str:
        return "\n\n".join([
            "F0 range of initial lowering at A and B (semitones)",
            format_table(self.lowering, ["RiseSizeA", "RiseSizeB"]),
            "F0 descent between each noun (semitones, later minus earlier)",
            format_table(self.boost, ["N1-N2", "N2-N3", "N3-N4"], with_cond=False),
        ])


def run_experiment(params: F0Params | None = None, cfg: ConstraintConfig | None = None,
                   model: str = "proposed") -> ExperimentReport:
    params = params or F0Params()
    cfg = cfg or ConstraintConfig()
    lowering, boost = [], []
    for fid in ("tree1", "tree2"):
        tree, exp = load_fixture(fid)
        contour = synthesize(prosodic_structure(tree, cfg), params)
        rises = measure_rises(contour, exp["gaps"])
        values = {"RiseSizeA": rises["A"], "RiseSizeB": rises["B"]}
        verdict = classify_initial_lowering(rises["A"], rises["B"], exp["cond"])
        lowering.append(Row(model, exp["sentence"], exp["cond"].replace("tree", "tree "), values, verdict))

    tree, exp = load_fixture("boost4N")
    contour = synthesize(prosodic_structure(tree, cfg), params)
    d = measure_descents(contour, exp["nouns"])
    verdict = classify_boost(d["N1-N2"], d["N2-N3"], d["N3-N4"])
    boost.append(Row(model, exp["sentence"], exp["cond"], d, verdict))
    return ExperimentReport(lowering, boost)
