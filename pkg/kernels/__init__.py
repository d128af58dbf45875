"""
Kernels module - Step kernels, configuration products and G(n, h) sampling

Contains:
- step: StepKernel, exact configuration products, host kernels, block duplication
- sampler: seeded inhomogeneous random digraphs
- montecarlo: sampled density means against the exact product
"""

from .step import (
    KernelError,
    StepKernel,
    config_product,
    duplicate_blocks,
    format_kernel,
    hom_density,
    load_kernel,
    parse_kernel,
    step_kernel_of_host,
)
from .sampler import sample_gnh
from .montecarlo import DensityCheck, mc_density_check

__all__ = [
    'KernelError',
    'StepKernel',
    'config_product',
    'duplicate_blocks',
    'format_kernel',
    'hom_density',
    'load_kernel',
    'parse_kernel',
    'step_kernel_of_host',
    'sample_gnh',
    'DensityCheck',
    'mc_density_check',
]
