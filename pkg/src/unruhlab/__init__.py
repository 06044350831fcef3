"""Entanglement of a two-qubit X state between an inertial and a uniformly
accelerated observer, after memory-correlated noise."""

from .channels import (
    ApplicationMode,
    ChannelKind,
    ChannelSpec,
    KrausSet,
    apply_channel,
    apply_kraus,
    completeness_residual,
    correlated_ad_kraus,
    correlated_pauli_kraus,
    pauli_probabilities,
    single_qubit_kraus,
    two_qubit_kraus,
)
from .concurrence import (
    ConcurrenceResult,
    closed_form_concurrence,
    spin_flip,
    wootters_concurrence,
    xstate_concurrence,
)
from .linalg import (
    dagger,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    partial_trace,
    psd_sqrt,
    tensor,
)
from .sweep import (
    EsdQuery,
    GridSpec,
    SweepRow,
    SweepSpec,
    emit_csv,
    esd_boundary,
    evolve_state,
    figure_preset,
    point_concurrence,
    run_figure,
    run_sweep,
)
from .svgplot import emit_svg_lineplot
from .unruh import R_MAX, acceleration_to_r, unruh_oracle, unruh_transform
from .xstate import (
    StateDiagnostics,
    StatePreset,
    Strictness,
    XStateCoeffs,
    build_x_state,
    custom_preset,
    is_x_form,
    preset_coeffs,
    state_diagnostics,
    state_preset,
    x_state_eigenvalues,
)

__version__ = "0.1.0"
