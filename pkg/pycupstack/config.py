import logging
import os

from .exceptions import ParameterError

logger = logging.getLogger(__name__)

BUDGET_ENVIRONMENT_VARIABLE = "CUPSTACK_BUDGET"


class Config(object):
    """Resource budgets and execution options shared by all operations

    :var state_budget: Maximum number of states a stackability search may expand
    :vartype state_budget: int
    :var weight_budget: Maximum number of states a minimum weight search may settle
    :vartype weight_budget: int
    :var vertex_budget: Largest product or power graph that may be built
    :vartype vertex_budget: int
    :var hamilton_budget: Largest vertex count for the exact Hamilton path search
    :vartype hamilton_budget: int
    :var enumeration_budget: Largest vertex count for connected graph enumeration
    :vartype enumeration_budget: int
    :var independent_set_budget: Largest vertex count for the exact independent set certificate search
    :vartype independent_set_budget: int
    :var automorphism_budget: Largest vertex count for automorphism orbit reduction
    :vartype automorphism_budget: int
    :var automorphism_limit: Maximum number of automorphisms enumerated for orbit reduction
    :vartype automorphism_limit: int
    :var workers: Number of worker processes for per-target work
    :vartype workers: int
    :var deterministic: Keep command output byte-identical across runs (no timings or timestamps)
    :vartype deterministic: bool
    """

    def __init__(self, **overrides):
        self.state_budget = 50_000_000
        self.weight_budget = 20_000_000
        self.vertex_budget = 250_000
        self.hamilton_budget = 24
        self.enumeration_budget = 7
        self.independent_set_budget = 30
        self.automorphism_budget = 17
        self.automorphism_limit = 20_000
        self.workers = 1
        self.deterministic = True
        for key, value in overrides.items():
            if not hasattr(self, key):
                raise ParameterError("unknown configuration option {}".format(key))
            setattr(self, key, value)

    @classmethod
    def from_environment(cls, environ=None, **overrides):
        """Build a configuration, letting CUPSTACK_BUDGET override the state budget

        :param environ: Mapping to read instead of os.environ
        :type environ: dict, optional
        :return: Configuration
        :rtype: :class:`Config`
        """
        environ = os.environ if environ is None else environ
        config = cls(**overrides)
        raw = environ.get(BUDGET_ENVIRONMENT_VARIABLE)
        if raw:
            try:
                config.state_budget = int(raw)
            except ValueError:
                raise ParameterError(
                    "{} must be an integer, got {!r}".format(BUDGET_ENVIRONMENT_VARIABLE, raw)
                )
            logger.info("state budget set to %d from environment", config.state_budget)
        return config


def resolve(config):
    """Return config, or the default configuration when config is None"""
    return Config() if config is None else config
