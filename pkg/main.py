import argparse
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv


from core.constructor import Constructor
from tags.scenario import ExitCode, Scenario, SweepParameter
from utils.errors import ConfigParseError, ScenarioFailure


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parses the command line ``adsmax <scenario> --config PATH [--out PATH] [--sweep PARAM --values V ...]``."""
    parser = argparse.ArgumentParser(prog="adsmax", description="Maximal disc verification scenarios.")
    parser.add_argument("scenario", choices=[scenario.label for scenario in Scenario])
    parser.add_argument("--config", required=True, type=Path, help="TOML run configuration")
    parser.add_argument("--out", default=None, help="report path without extension")
    parser.add_argument(
        "--sweep",
        default=None,
        choices=[parameter.label for parameter in SweepParameter],
        help="parameter varied by a sweep",
    )
    parser.add_argument("--values", nargs="+", type=float, default=None, help="sweep values")
    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point of the program.

    Steps:
        1. Load environment variables from a `.env` file.
        2. Build the environment, the logger and the run configuration.
        3. Run the scenario once, or once per value of a sweep.

    Returns:
        int: 0 if every check passed, 1 if a check failed or a scenario
        aborted, 2 if the configuration could not be parsed.
    """
    load_dotenv(override=True)
    args = parse_args(argv)
    builder = Constructor()
    builder.build_environment()
    builder.build_logger()
    logger = builder.logger
    try:
        builder.build_config(args.config, args.scenario, args.out)
        config = builder.config
        parameter = SweepParameter.parse(args.sweep) if args.sweep else config.sweep_parameter
        values = tuple(args.values) if args.values else config.sweep_values
        if parameter is not None and not values:
            raise ConfigParseError(f"sweep over {parameter.label} needs values")
    except ConfigParseError as error:
        logger.error("configuration error: %s", error)
        return int(ExitCode.CONFIG_ERROR)
    builder.build_runner()
    try:
        if parameter is None:
            passed = builder.runner.run(config).passed
        else:
            passed = all(report.passed for report in builder.runner.sweep(config, parameter, values))
    except ScenarioFailure as failure:
        logger.error("scenario failed: %s", failure)
        return int(ExitCode.FAIL)
    return int(ExitCode.PASS if passed else ExitCode.FAIL)


if __name__ == "__main__":
    sys.exit(main())
