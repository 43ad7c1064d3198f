"""
CLI output formatters using Rich.

Text output is for people; JSON output is the stable surface.
Author: DmitrTRC
"""

from typing import Optional, Sequence, Union

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from sctool.domain.cc import CCResult, format_rational
from sctool.domain.majority import CondorcetReport, MajorityRelation, MarginMatrix
from sctool.domain.models import Tree
from sctool.domain.oracle import ExhaustiveRecognition
from sctool.domain.sctree import (
    CutTable,
    LineOrdering,
    NoCutWitness,
    NonLineWitness,
    NotSingleCrossing,
    RecognitionResult,
)


def _edges(tree: Tree) -> str:
    return ", ".join(f"{u}-{v}" for u, v in tree.edges) or "(no edges)"


class ReportFormatter:
    """Formatter for analysis reports."""

    def __init__(self, console: Console) -> None:
        """
        Initialize formatter.

        Args:
            console: Rich console instance
        """
        self.console = console

    def verdict(self, positive: bool, message: str) -> None:
        """Print a one-line verdict."""
        style = "bold green" if positive else "bold red"
        mark = "✓" if positive else "✗"
        self.console.print(Text(f"{mark} {message}", style=style))

    # ═══════════════════════════════════════════════════════════
    # Trees
    # ═══════════════════════════════════════════════════════════

    def format_cut_table(self, table: CutTable) -> Table:
        """
        Format a cut table.

        Args:
            table: Cut table to format

        Returns:
            Rich Table object
        """
        names = tuple(c.name for c in table.candidates)
        out = Table(
            title="Cuts",
            show_header=True,
            header_style="bold cyan",
            border_style="blue",
        )
        out.add_column("Pair", style="cyan")
        out.add_column("Cut", style="green")
        out.add_column("Prefer first", style="dim")

        for cut in table.cuts:
            if cut.edge is not None:
                where = f"edge {cut.edge[0]}-{cut.edge[1]}"
            else:
                assert cut.virtual is not None
                where = f"virtual ({cut.virtual.value})"
            out.add_row(
                f"{names[cut.a]},{names[cut.b]}",
                where,
                " ".join(str(v) for v in sorted(cut.side_a)) or "-",
            )
        return out

    def show_verify(
        self,
        table: Optional[CutTable],
        witness: Optional[NoCutWitness],
        profile_names: Sequence[str],
    ) -> None:
        """Show the outcome of `verify`."""
        if witness is not None:
            self.verdict(False, "not single-crossing on this tree")
            self.console.print(witness.describe(tuple(profile_names)), markup=False)
            return
        assert table is not None
        self.verdict(True, "single-crossing on this tree")
        self.console.print(self.format_cut_table(table))

    def show_recognition(
        self,
        result: RecognitionResult,
        line: Optional[Union[LineOrdering, NonLineWitness]] = None,
    ) -> None:
        """Show a recognized profile."""
        self.verdict(True, "single-crossing on a tree")
        summary = Table(show_header=False, box=None, padding=(0, 2))
        summary.add_column(style="cyan bold")
        summary.add_column(style="white")
        summary.add_row("Classes", str(result.reduced.r))
        summary.add_row("Minimal tree", _edges(result.reduced_tree))
        summary.add_row("Voter tree", _edges(result.full_tree))
        if isinstance(line, LineOrdering):
            summary.add_row("Line", " ".join(str(v) for v in line.ordering))
        elif isinstance(line, NonLineWitness):
            voters = " ".join(str(v) for v in line.voters)
            summary.add_row("Branching", f"voter {line.center} (neighbors {voters})")
        self.console.print(Panel(summary, title="Recognition", border_style="green"))
        self.console.print(self.format_cut_table(result.cut_table))

    def show_not_single_crossing(self, result: NotSingleCrossing) -> None:
        """Show a stuck recognition."""
        self.verdict(False, "not single-crossing")
        self.console.print(
            f"No potential leaf among classes {list(result.classes)} "
            f"(voters {list(result.voters)})",
            markup=False,
        )

    # ═══════════════════════════════════════════════════════════
    # Majority
    # ═══════════════════════════════════════════════════════════

    def format_margins(self, margins: MarginMatrix) -> Table:
        """Format the margin matrix, rows beating columns."""
        names = [c.name for c in margins.candidates]
        table = Table(title="Margins", show_header=True, header_style="bold cyan")
        table.add_column("", style="cyan bold")
        for name in names:
            table.add_column(name, justify="right")
        for a, name in enumerate(names):
            table.add_row(
                name,
                *(
                    "·" if a == b else str(margins.margin(a, b))
                    for b in range(len(names))
                ),
            )
        return table

    def show_majority(
        self,
        margins: MarginMatrix,
        relation: MajorityRelation,
        status: str,
        voter: Optional[int],
    ) -> None:
        """Show margins, relation and representative voter."""
        names = [c.name for c in relation.candidates]
        self.console.print(self.format_margins(margins))
        ranking = relation.as_ranking()
        if relation.transitive:
            self.verdict(True, "strict majority relation is transitive")
        else:
            triple = relation.intransitive_triple()
            assert triple is not None
            cycle = " > ".join(names[c] for c in triple)
            self.verdict(False, f"strict majority relation is not transitive ({cycle})")
        if ranking is not None:
            order = " ".join(names[c] for c in ranking)
            self.console.print(f"Majority order: {order}", markup=False)
        winner = relation.condorcet_winner()
        if winner is not None:
            self.console.print(f"Condorcet winner: {names[winner]}", markup=False)
        if status == "found":
            self.console.print(f"Representative voter: {voter}")
        elif status == "even_electorate":
            self.console.print("Representative voter: even electorate", style="yellow")
        else:
            self.console.print("Representative voter: none", style="red")

    def show_condorcet(self, report: CondorcetReport) -> None:
        """Show a Condorcet sampling report."""
        if report.passed:
            self.verdict(True, f"transitive in all {report.trials} trials")
            return
        self.verdict(False, f"{report.failures} of {report.trials} trials intransitive")
        example = report.counterexample
        if example is not None:
            names = [report.candidates[c].name for c in example.cycle]
            weights = " ".join(str(w) for w in example.weights)
            cycle = " > ".join(names)
            self.console.print(f"Weights {weights}: cycle {cycle}", markup=False)

    # ═══════════════════════════════════════════════════════════
    # Committees
    # ═══════════════════════════════════════════════════════════

    def format_assignment(self, result: CCResult) -> Table:
        """Format voter representatives."""
        names = [c.name for c in result.candidates]
        table = Table(title="Assignment", show_header=True, header_style="bold cyan")
        table.add_column("Voter", style="dim", justify="right")
        table.add_column("Representative", style="green")
        for v, c in enumerate(result.assignment.representatives, start=1):
            table.add_row(str(v), names[c])
        return table

    def show_committee(self, result: CCResult) -> None:
        """Show a committee result."""
        names = [c.name for c in result.candidates]
        committee = " ".join(names[c] for c in result.committee)
        phi = format_rational(result.phi)
        self.verdict(True, f"phi = {phi} ({result.mode.value}, k={result.k})")
        self.console.print(f"Committee: {committee}", markup=False)
        self.console.print(self.format_assignment(result))

    # ═══════════════════════════════════════════════════════════
    # Oracles
    # ═══════════════════════════════════════════════════════════

    def show_trees(self, n: int, trees: Sequence[Tree]) -> None:
        """List labeled trees, one per line."""
        self.console.print(f"{len(trees)} labeled trees on {n} vertices", style="bold")
        for tree in trees:
            self.console.print(_edges(tree))

    def show_exhaustive(self, result: ExhaustiveRecognition) -> None:
        """Show exhaustive recognition counts."""
        self.verdict(
            result.single_crossing,
            f"{len(result.passing)} passing trees, {len(result.minimal)} minimal",
        )
        for tree in result.minimal:
            self.console.print(_edges(tree))

    def show_classical(self, ordering: Optional[tuple[int, ...]]) -> None:
        """Show a classical single-crossing ordering."""
        if ordering is None:
            self.verdict(False, "no single-crossing voter ordering")
            return
        self.verdict(True, "single-crossing ordering " + " ".join(map(str, ordering)))

