"""Rich tables for scan and check results."""
from typing import Dict, List

from rich.console import Console
from rich.table import Table

from hahnspec.spectral_analysis import ConsistencyViolation

console = Console()


def census_table(title: str, census: Dict[str, int]) -> Table:
    table = Table(title=title, show_header=True, header_style="bold magenta")
    table.add_column("Class")
    table.add_column("Points", justify="right")
    for name, count in census.items():
        table.add_row(name or "-", str(count))
    table.add_row("total", str(sum(census.values())), style="bold")
    return table


def violations_table(violations: List[ConsistencyViolation], limit: int = 50) -> Table:
    table = Table(title=f"Consistency violations ({len(violations)})", show_header=True, header_style="bold red")
    table.add_column("alpha")
    table.add_column("Identity")
    table.add_column("Detail")
    for v in violations[:limit]:
        table.add_row(f"{v.alpha.re:+.6g}{v.alpha.im:+.6g}i", v.identity, v.detail)
    if len(violations) > limit:
        table.add_row("...", f"{len(violations) - limit} more", "")
    return table


def display_census(region_census: Dict[str, int], goldberg_census: Dict[str, int]) -> None:
    console.print(census_table("Spectral regions", region_census))
    console.print(census_table("Goldberg states", goldberg_census))


def display_violations(violations: List[ConsistencyViolation]) -> None:
    if not violations:
        console.print("[bold green]No consistency violations[/bold green]")
        return
    console.print(violations_table(violations))
