"""Kernelization toolkit for distance-r domination problems on sparse
graphs: certified greedy approximations, water-lily based constraint and
solution cores, projection kernels, bikernels, gadget kernels and shared
multikernels, all backed by exhaustive solvers for verification."""

from .cores import (AnnotatedCoreResult, CoreResult, PeelStep,
                    constraint_core_rc_dom, constraint_core_roman,
                    constraint_core_total, reduce_annotated_lambda_mu,
                    solution_core_scattered)
from .domination import (DominationCertificate, RcDominationResult,
                         approx_dominating, approx_rc_dominating,
                         verify_certificate)
from .errors import (ClosureDivergedError, InfeasibleError, InputError,
                     InternalCheckError, LilyKernelError, SizeGuardError)
from .generators import GeneratorSpec, generate, parse_spec
from .graph import (Graph, GraphBuilder, ball, bfs_distances, degeneracy,
                    degeneracy_order, from_edges, greedy_scattered,
                    greedy_separated, induced_subgraph, parse_graph,
                    serialize_graph, wcol_upper_bound)
from .harness import (PipelineReport, annotated_decision, annotated_optimum,
                      verify_multikernel_dom_ind,
                      verify_multikernel_domination_family, verify_pipeline)
from .kernels import (AnnotatedInstance, DomIndKernel, DominationFamilyKernel,
                      PreparedBikernel, be_kernel_perfect_code,
                      be_kernel_rc_dom, be_kernel_roman, be_kernel_scattered,
                      be_kernel_total, bikernel_lambda_mu, bikernel_rc_dom,
                      bikernel_roman, bikernel_scattered, bikernel_total,
                      multikernel_dom_ind, multikernel_domination_family,
                      parse_instance, plain_instance, prepare_bikernel,
                      serialize_instance, strip_gadgets, trivial_no,
                      trivial_yes)
from .oracle import (OracleAnswer, max_scattered, opt_lambda_mu,
                     opt_perfect_code, opt_rc_dom, opt_roman, opt_total)
from .projections import (ProjectionKernel, ProjectionProfile, path_closure,
                          profile, profile_partition, projection,
                          projection_closure, projection_kernel, shadow,
                          verify_projection_kernel)
from .reporting import EmpiricalConstants, Measurement
from .wideness import (LilyReport, PadSignature, SigmaUniformLily, UqwResult,
                       WaterLily, find_sigma_uniform_lily, find_uniform_lily,
                       pad_signature, uqw, verify_lily)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
