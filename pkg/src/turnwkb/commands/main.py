from turnwkb.commands.approx import approx_command
from turnwkb.commands.bench import bench_command
from turnwkb.commands.blowup import blowup_command
from turnwkb.commands.convergence import convergence_command
from turnwkb.commands.solve import solve_command
from turnwkb.commands.version import version_command
from turnwkb.parsing import main_group


@main_group
def main():
    """
    Solve eps^2 psi'' + a(x) psi = 0 on [0, 1] across a turning point at
    x = 0, and run the accuracy and efficiency studies of the hybrid
    Airy/parabolic-cylinder + WKB-marching solver.

    All `turnwkb` subcommands support `--help` documentation.
    """


main.add_command(version_command)

main.add_command(solve_command)

main.add_command(convergence_command)
main.add_command(blowup_command)
main.add_command(bench_command)
main.add_command(approx_command)
