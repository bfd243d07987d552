"""Figure rendering for batch reports.

The batch command writes a grouped bar chart of result categories per
agent next to its CSV output.  Rendering is headless (Agg backend) so
it works in CI and over SSH.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .agents import SUMMARY_CATEGORIES  # noqa: E402

_CATEGORY_COLORS = {
    "proof_found": "#2a9d8f",
    "step_limit": "#e9c46a",
    "out_of_memory": "#f4a261",
    "timeout": "#e76f51",
    "parse_error": "#9d4edd",
}


def save_category_chart(counts_by_agent: dict[str, dict[str, int]], path: str | Path) -> Path:
    """Write a category-by-agent bar chart to ``path`` and return it."""
    path = Path(path)
    agents = list(counts_by_agent)
    categories = list(SUMMARY_CATEGORIES)
    for counts in counts_by_agent.values():
        for category in counts:
            if category not in categories:
                categories.append(category)

    fig, ax = plt.subplots(figsize=(1.8 + 1.6 * max(1, len(agents)), 3.6))
    group_width = 0.8
    bar_width = group_width / max(1, len(categories))
    for ci, category in enumerate(categories):
        offsets = [
            ai - group_width / 2 + bar_width * (ci + 0.5) for ai in range(len(agents))
        ]
        values = [counts_by_agent[a].get(category, 0) for a in agents]
        ax.bar(
            offsets, values, width=bar_width,
            label=category, color=_CATEGORY_COLORS.get(category),
        )
    ax.set_xticks(range(len(agents)))
    ax.set_xticklabels(agents)
    ax.set_ylabel("problems")
    ax.set_title("episode outcomes by agent")
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
