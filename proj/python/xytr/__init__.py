import json

from ._xytr import CurveRejected, Error, SyntaxError, fingerprint, run, tr, tree_count, version, xy

__all__ = ["CurveRejected", "Error", "SyntaxError", "fingerprint", "run", "run_json", "tr", "tree_count", "version", "xy"]


def run_json(args):
    code, out, err = run(list(args) + ["--format", "json"])
    return code, (json.loads(out) if out else None), err
