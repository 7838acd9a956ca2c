from algorithms._frames import decompose_stack, foreground_display, stack_frames, unstack
from algorithms._solver import (
    IterationObserver,
    WeightSnapshots,
    gaussian_init,
    objective,
    objective_l0,
    power_init,
    solve,
    stationarity_residuals,
    update_sparse_l0,
    update_sparse_l2,
    update_u,
    update_v,
)
from algorithms._synthetic import (
    cell_seed,
    classify_support,
    gen_lowrank,
    gen_sparse_noise,
    generate_instance,
    rmse,
    scale_noise,
    snr_of,
    support_accuracy,
    support_f1,
)
from algorithms._weights import (
    init_weights,
    intermediate_weights,
    max_weight_change,
    scaling_factor,
    update_weights,
)
