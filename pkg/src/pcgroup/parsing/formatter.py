""" Writes an FpPresentation back in the presentation-file syntax. """
from __future__ import annotations

from pcgroup.quotient.fp import FpPresentation


def format_presentation(fp: FpPresentation) -> str:
    lines = [f"# {c}" for c in fp.comments]
    if fp.name:
        lines.append(f"name {fp.name}")
    lines.append(f"prime {fp.p}")
    if fp.max_class is not None:
        lines.append(f"class {fp.max_class}")
    lines.append("generators " + ", ".join(fp.generators))
    entries = [str(w) for w in fp.relators] + [f"{lhs} = {rhs}" for lhs, rhs in fp.relations]
    if entries:
        lines.append("relators")
        lines.extend(f"  {e}," for e in entries[:-1])
        lines.append(f"  {entries[-1]}")
    return "\n".join(lines) + "\n"
