"""Runtime settings shared by the library and the CLI."""

from dataclasses import dataclass, field

from .enums import CheckStrictness
from .errors import DocumentError
from .json_document import JsonDocument

DEFAULT_GALLOP_CAP = 1 << 64
DEFAULT_SAMPLE_BUDGET = 100_000
DEFAULT_SAMPLE_SEED = 0
LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


@dataclass
class Settings(JsonDocument):
    """Tunable limits and policies.

    Loaded from a JSON file with ``Settings.from_file`` or built from defaults.
    """

    gallop_cap: int = field(
        default=DEFAULT_GALLOP_CAP,
        metadata={"description": "Largest x probed by pseudo_inverse before giving up"},
    )
    sample_budget: int = field(
        default=DEFAULT_SAMPLE_BUDGET,
        metadata={"description": "Box size above which checkers switch to sampling"},
    )
    sample_seed: int = field(
        default=DEFAULT_SAMPLE_SEED,
        metadata={"description": "Seed for the sampled interior points of checkers"},
    )
    contract_check: str = field(
        default=CheckStrictness.PERMISSIVE.value,
        metadata={"description": "strict, lenient or permissive contract sampling"},
    )
    contract_sample_bound: int = field(
        default=256,
        metadata={"description": "Points sampled when checking a MonotoneSource"},
    )
    log_level: str = field(
        default="WARNING",
        metadata={"description": "Logging level used by the CLI"},
    )

    def validate(self) -> None:
        if self.gallop_cap < 1:
            raise DocumentError("must be >= 1", field="gallop_cap")
        if self.sample_budget < 0:
            raise DocumentError("must be >= 0", field="sample_budget")
        if self.contract_sample_bound < 0:
            raise DocumentError("must be >= 0", field="contract_sample_bound")
        try:
            CheckStrictness(self.contract_check)
        except ValueError as e:
            valid = ", ".join(s.value for s in CheckStrictness)
            raise DocumentError(
                f"unknown strictness {self.contract_check!r} (valid: {valid})",
                field="contract_check",
            ) from e
        if self.log_level.upper() not in LOG_LEVELS:
            valid = ", ".join(LOG_LEVELS)
            raise DocumentError(
                f"unknown level {self.log_level!r} (valid: {valid})",
                field="log_level",
            )

    @property
    def strictness(self) -> CheckStrictness:
        """Contract checking policy as an enum."""
        return CheckStrictness(self.contract_check)


def default_settings() -> Settings:
    """Return a fresh Settings instance with every default applied."""
    return Settings()
