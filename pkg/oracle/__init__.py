"""Independent brute-force references used to check the production paths."""

from oracle.dense import (
    coin_matrix,
    dense_evolve,
    dense_step_matrix,
    displacement_matrix,
    field_to_vector,
    interaction_matrix,
    single_particle_distribution,
    single_particle_walk,
    vector_to_field,
)
from oracle.crosscheck import eigenphase_crosscheck, eigenphases_from_matrix, hermitian_pair

__all__ = [
    "coin_matrix",
    "dense_evolve",
    "dense_step_matrix",
    "displacement_matrix",
    "field_to_vector",
    "interaction_matrix",
    "single_particle_distribution",
    "single_particle_walk",
    "vector_to_field",
    "eigenphase_crosscheck",
    "eigenphases_from_matrix",
    "hermitian_pair",
]
