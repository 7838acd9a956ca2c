from services._bench_service import BenchService, run_bench
from services._decomposition_service import DecompositionService
from services._stack_service import StackService
from services._synth_service import SynthService
