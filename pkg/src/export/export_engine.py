import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

import pandas as pd

import config
from core.graph import Graph
from core.twins import QuotientSequence


class ExportEngine:
    """Renders reports, quotient chains and catalog tables"""

    FORMATS = ("json", "text", "csv", "dot")

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.indent = config.EXPORT_CONFIG["json_indent"]
        self.schema = config.EXPORT_CONFIG["json_schema"]

    # -- JSON ---------------------------------------------------------------

    def export_json(self, document: Union[Dict, object]) -> str:
        """Deterministic JSON; objects with to_dict() are converted first"""
        try:
            data = document.to_dict() if hasattr(document, "to_dict") else document
            if "schema" not in data:
                data = {"schema": self.schema, **data}
            return json.dumps(data, indent=self.indent, ensure_ascii=False, default=_json_default) + "\n"
        except Exception as e:
            self.logger.error(f"Error generating JSON export: {e}")
            raise

    def export_error(self, error: Exception) -> str:
        """Machine-readable error document"""
        data = {
            "schema": self.schema,
            "error": {"type": type(error).__name__, "message": str(error)},
        }
        return json.dumps(data, indent=self.indent, ensure_ascii=False) + "\n"

    # -- DOT ----------------------------------------------------------------

    def export_dot(self, graph: Graph, name: str = "G") -> str:
        return graph.to_dot(name)

    def export_chain_dot(self, chain: QuotientSequence) -> Dict[str, str]:
        """One DOT document per graph of the chain, keyed by file name"""
        documents = {}
        for i, graph in enumerate(chain.graphs):
            documents[f"step_{i}.dot"] = graph.to_dot(f"step_{i}")
        return documents

    def write_dot_files(self, documents: Dict[str, str], directory: Union[str, Path]) -> List[Path]:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        paths = []
        for filename, text in documents.items():
            paths.append(self.save_to_file(text, directory / filename))
        self.logger.info(f"Wrote {len(paths)} DOT file(s) to {directory}")
        return paths

    # -- tables -------------------------------------------------------------

    def export_table_csv(self, frame: pd.DataFrame) -> str:
        try:
            return frame.to_csv(index=config.EXPORT_CONFIG["csv_index"], lineterminator="\n")
        except Exception as e:
            self.logger.error(f"Error generating CSV export: {e}")
            raise

    def export_table_json(self, frame: pd.DataFrame, job: Optional[str] = None) -> str:
        data = {"schema": self.schema}
        if job:
            data["job"] = job
        data["rows"] = json.loads(frame.to_json(orient="records"))
        return self.export_json(data)

    # -- text ---------------------------------------------------------------

    def export_text(self, document: Dict) -> str:
        """Short human-readable summary of a report document"""
        try:
            lines = []
            source = document.get("input", {})
            lines.append(f"# {source.get('graph_spec', 'graph')}")
            lines.append(f"order {source.get('order')}, edges {source.get('edges')}, "
                         f"connected {source.get('connected')}, bipartite {source.get('bipartite')}")

            twins = document.get("twins", {})
            if twins.get("kind") not in (None, "none"):
                lines.append(f"twins: {twins['kind']}, w={twins.get('generator')}, t={twins.get('class_size')}")
            else:
                lines.append("twins: none")

            chain = document.get("quotient_chain", {})
            steps = chain.get("steps", [])
            if steps:
                path = " -> ".join(
                    [steps[0]["graph_spec"] or f"G_{steps[0]['order']}"]
                    + [s["quotient_spec"] or f"G_{s['quotient_order']}" for s in steps]
                )
                lines.append(f"quotient chain: {path} ({', '.join(s['kind'] for s in steps)})")

            cotwins = document.get("cotwins", {})
            if cotwins.get("kind") not in (None, "none"):
                lines.append(f"co-twins: {cotwins['kind']}, k={cotwins.get('k')}")

            group = document.get("group", {})
            lines.append(f"|Aut| = {group.get('order')} = {group.get('expression')} [{group.get('provenance')}]")

            symmetry = document.get("symmetry", {})
            for key in ("det", "dist"):
                lines.append(f"{key} = {_format_measure(symmetry.get(key, {}))}")
            if "arc_transitive" in symmetry:
                lines.append(f"arc-transitive: {symmetry['arc_transitive']}")

            verification = document.get("verification")
            if verification is not None:
                failed = [c["claim"] for c in verification["claims"] if not c["ok"]]
                status = "all verified" if not failed else f"FAILED: {', '.join(failed)}"
                lines.append(f"verification: {len(verification['claims'])} claims, {status}")
            return "\n".join(lines) + "\n"
        except Exception as e:
            self.logger.error(f"Error generating text summary: {e}")
            raise

    # -- files --------------------------------------------------------------

    def save_to_file(self, content: str, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        self.logger.debug(f"Saved {len(content)} characters to {path}")
        return path


def _format_measure(measure: Dict) -> str:
    if "value" in measure:
        text = str(measure["value"])
    elif "bounds" in measure:
        text = f"{measure['bounds']['lo']}..{measure['bounds']['hi']}"
    else:
        return "?"
    text += f" [{measure.get('method')}]"
    if "exhaustive" in measure:
        text += f", exhaustive {measure['exhaustive']}"
    return text


def _json_default(value):
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if hasattr(value, "item"):
        return value.item()
    if isinstance(value, (set, frozenset, tuple)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")
