"""
Core Classes Module for the Network Dictionary Toolkit

Networks, parameter records, dictionaries, samplers and the learning driver.
NetworkReconstructor and DenoisePipeline depend on core.functions and are
imported from their own modules.
"""

# Import all classes for easy access
from .config_loader import ConfigLoader
from .ndl_errors import (
    NdlError, ParameterError, StructureError, ParseError, ConsistencyError,
    DeadEndError, MixingError, CapacityError, ShapeError, NumericError,
    UndefinedMetricError, MetricError, MethodUnavailableError, UsageError
)
from .network import Network
from .run_specs import (
    McmcMode, NoiseKind, ModelSpec, NoiseSpec, SamplerConfig,
    NdlParams, NdrParams, ScoredPairs
)
from .network_dictionary import Dictionary, AggregateState, dominance_scores
from .reconstruction_accumulator import ReconstructionAccumulator
from .motif_chain import MotifChain
from .dictionary_learner import DictionaryLearner, learn_dictionary

__all__ = [
    'ConfigLoader',

    # Errors
    'NdlError', 'ParameterError', 'StructureError', 'ParseError',
    'ConsistencyError', 'DeadEndError', 'MixingError', 'CapacityError',
    'ShapeError', 'NumericError', 'UndefinedMetricError', 'MetricError',
    'MethodUnavailableError', 'UsageError',

    # Data types
    'Network', 'McmcMode', 'NoiseKind', 'ModelSpec', 'NoiseSpec',
    'SamplerConfig', 'NdlParams', 'NdrParams', 'ScoredPairs',
    'Dictionary', 'AggregateState', 'dominance_scores',
    'ReconstructionAccumulator',

    # Drivers
    'MotifChain', 'DictionaryLearner', 'learn_dictionary',
]
