use crate::error::OperatorError;

/// Whether vertex-operator terms carry the 1/|a_q^out|, 1/|a_q^in|
/// cardinality factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum VertexCardinalityMode {
    #[default]
    Reciprocal,
    Unit,
}

/// Shape of the vertex adjoint: `Mirror` is the general adjoint;
/// `NegatedTotalDegree` drops the cardinality factors and multiplies the
/// per-vertex sum by −1/deg(v) instead (0 at isolated vertices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum VertexAdjointMode {
    #[default]
    Mirror,
    NegatedTotalDegree,
}

/// Whether hyperarc-operator terms carry the 1/deg_out(v), 1/deg_in(v)
/// degree factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HyperarcDegreeMode {
    #[default]
    ReciprocalInOut,
    Unit,
}

/// Shape of the hyperarc adjoint: `Mirror` is the general adjoint;
/// `NegatedTotalDegree` replaces the in/out degree factors with a uniform
/// −1/deg(v) per-vertex factor (and carries no W_G^θ prefactor).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HyperarcAdjointMode {
    #[default]
    Mirror,
    NegatedTotalDegree,
}

/// How to evaluate a Laplacian: `Composed` runs divergence after gradient
/// (valid in every mode); `Explicit` evaluates the double-sum closed form
/// (defined only for the default modes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    #[default]
    Composed,
    Explicit,
}

/// The full parameterization of the operator family: seven real weight
/// exponents plus four structural mode switches. [`OperatorConfig::default`]
/// gives the general definitions with all exponents 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorConfig {
    /// Exponent of the vertex weight w_I in gradients/adjoints and the
    /// vertex inner product.
    pub alpha: f64,
    /// Exponent of the hyperarc weight W_I in adjoints and the hyperarc
    /// inner product.
    pub beta: f64,
    /// Exponent of the hyperarc weight W_G in the vertex family.
    pub gamma: f64,
    /// Exponent of the vertex weight w_G on input-side terms of the vertex
    /// family.
    pub epsilon: f64,
    /// Exponent of the vertex weight w_G on output-side terms of the vertex
    /// family.
    pub eta: f64,
    /// Exponent of the vertex weight w_G in the hyperarc family.
    pub zeta: f64,
    /// Exponent of the hyperarc weight W_G in the hyperarc family.
    pub theta: f64,
    pub vertex_cardinality_mode: VertexCardinalityMode,
    pub vertex_adjoint_mode: VertexAdjointMode,
    pub hyperarc_degree_mode: HyperarcDegreeMode,
    pub hyperarc_adjoint_mode: HyperarcAdjointMode,
}

impl Default for OperatorConfig {
    fn default() -> Self {
        OperatorConfig {
            alpha: 0.0,
            beta: 0.0,
            gamma: 0.0,
            epsilon: 0.0,
            eta: 0.0,
            zeta: 0.0,
            theta: 0.0,
            vertex_cardinality_mode: VertexCardinalityMode::default(),
            vertex_adjoint_mode: VertexAdjointMode::default(),
            hyperarc_degree_mode: HyperarcDegreeMode::default(),
            hyperarc_adjoint_mode: HyperarcAdjointMode::default(),
        }
    }
}

impl OperatorConfig {
    /// Ensures every exponent is finite.
    pub fn validate(&self) -> Result<(), OperatorError> {
        let named = [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
            ("epsilon", self.epsilon),
            ("eta", self.eta),
            ("zeta", self.zeta),
            ("theta", self.theta),
        ];
        for (name, value) in named {
            if !value.is_finite() {
                return Err(OperatorError::NotFinite { name });
            }
        }
        Ok(())
    }

    /// True when both vertex-family modes are the defaults, which is where
    /// the explicit vertex closed forms are defined.
    pub(crate) fn vertex_modes_are_default(&self) -> bool {
        self.vertex_cardinality_mode == VertexCardinalityMode::Reciprocal
            && self.vertex_adjoint_mode == VertexAdjointMode::Mirror
    }

    /// True when both hyperarc-family modes are the defaults, which is where
    /// the explicit hyperarc closed forms are defined.
    pub(crate) fn hyperarc_modes_are_default(&self) -> bool {
        self.hyperarc_degree_mode == HyperarcDegreeMode::ReciprocalInOut
            && self.hyperarc_adjoint_mode == HyperarcAdjointMode::Mirror
    }
}

/// Published parameter choices that recover known operators from the
/// general family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// All exponents 0, default modes: the general unweighted definitions.
    GeneralDefault,
    /// γ = ½, β = 1 on graphs: the common vertex gradient
    /// √W_G·(f_j − f_i) and its p-Laplacian (suggested W_I ≡ ½).
    ElmoatazGraphVertex,
    /// ζ = ½, β = 1, unit degree mode on graphs: the simplified arc
    /// gradient (suggested W_I ≡ ½).
    ElmoatazGraphArc,
    /// Unweighted vertex p-Laplacian with unit cardinalities and the
    /// −1/deg(v) adjoint; agrees with [`crate::jost_vertex_p_laplacian`].
    JostVertex,
    /// Unweighted hyperarc p-Laplacian with unit degree factors and the
    /// −1/deg(v) adjoint; agrees with [`crate::jost_hyperarc_p_laplacian`].
    JostHyperarc,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::GeneralDefault,
        Preset::ElmoatazGraphVertex,
        Preset::ElmoatazGraphArc,
        Preset::JostVertex,
        Preset::JostHyperarc,
    ];

    /// The operator configuration this preset names.
    pub fn config(self) -> OperatorConfig {
        let base = OperatorConfig::default();
        match self {
            Preset::GeneralDefault => base,
            Preset::ElmoatazGraphVertex => OperatorConfig {
                beta: 1.0,
                gamma: 0.5,
                ..base
            },
            Preset::ElmoatazGraphArc => OperatorConfig {
                beta: 1.0,
                zeta: 0.5,
                hyperarc_degree_mode: HyperarcDegreeMode::Unit,
                ..base
            },
            Preset::JostVertex => OperatorConfig {
                vertex_cardinality_mode: VertexCardinalityMode::Unit,
                vertex_adjoint_mode: VertexAdjointMode::NegatedTotalDegree,
                ..base
            },
            Preset::JostHyperarc => OperatorConfig {
                hyperarc_degree_mode: HyperarcDegreeMode::Unit,
                hyperarc_adjoint_mode: HyperarcAdjointMode::NegatedTotalDegree,
                ..base
            },
        }
    }

    /// Constant hyperarc weight W_I the source formulation pairs with this
    /// preset, when it suggests one.
    pub fn suggested_big_w_i(self) -> Option<f64> {
        match self {
            Preset::ElmoatazGraphVertex | Preset::ElmoatazGraphArc => Some(0.5),
            _ => None,
        }
    }

    /// Stable kebab-case identifier used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Preset::GeneralDefault => "general-default",
            Preset::ElmoatazGraphVertex => "elmoataz-graph-vertex",
            Preset::ElmoatazGraphArc => "elmoataz-graph-arc",
            Preset::JostVertex => "jost-vertex",
            Preset::JostHyperarc => "jost-hyperarc",
        }
    }

    pub fn from_name(name: &str) -> Option<Preset> {
        Preset::ALL.into_iter().find(|p| p.name() == name)
    }
}
