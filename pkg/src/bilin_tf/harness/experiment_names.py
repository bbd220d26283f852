from enum import StrEnum


class Experiment(StrEnum):
    """Experiments available as CLI sub-commands."""

    # square functions
    PLANCHEREL_CHECK = "plancherel_check"
    RDF_SWEEP = "rdf_sweep"
    BILINEAR_SWEEP = "bilinear_sweep"
    ENDPOINT_R2 = "endpoint_r2"

    # tile model sums
    ENERGY_ALGO_AUDIT = "energy_algo_audit"
    MODEL_SUM_AUDIT = "model_sum_audit"
    LAMBDA_BOUND_AUDIT = "lambda_bound_audit"
    WEAK_TYPE_ESTIMATE = "weak_type_estimate"

    # pseudo-differential symbols
    PSEUDO_BUCKET = "pseudo_bucket"
    TRANSLATED_FAMILY = "translated_family"
    OFFDIAG_DECAY = "offdiag_decay"

    @property
    def command(self) -> str:
        return self.value.replace("_", "-")

    @staticmethod
    def get_all_experiment_names() -> set[str]:
        return {member.value for member in Experiment}
