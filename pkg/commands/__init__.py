from commands import bench, decompose, stack_decompose, synth

COMMANDS = (synth, decompose, bench, stack_decompose)
