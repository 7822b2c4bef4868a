//! Exact single-qubit channel algebra in the Pauli transfer matrix (PTM)
//! representation.
//!
//! Operators are expanded in the normalized Pauli basis {I, σx, σy, σz}/√2,
//! which makes every PTM a real 4×4 matrix, inner products plain dot
//! products, and outcome probabilities a single contraction
//! `effect · (M · state)`.

use crate::error::{ensure_finite, invalid, Error, Result};
use ndarray::Array2;
use ndarray_linalg::Eigh;

pub const SQRT2_INV: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Tolerance for the trace-preservation row check.
pub const TP_TOL: f64 = 1e-10;
/// Channels with Choi eigenvalues above this are accepted as CP.
pub const CP_EIG_TOL: f64 = -1e-8;
/// Probabilities may stick out of [0, 1] by at most this before clamping.
pub const PROB_CLAMP_TOL: f64 = 1e-9;

pub type Mat4 = [[f64; 4]; 4];

pub const MAT4_ZERO: Mat4 = [[0.0; 4]; 4];
pub const MAT4_ID: Mat4 = [
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
];

pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = MAT4_ZERO;
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..4 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn mat4_vec(a: &Mat4, v: &[f64; 4]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i] += a[i][j] * v[j];
        }
    }
    out
}

fn mat4_add(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = MAT4_ZERO;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    out
}

fn mat4_scale(a: &Mat4, s: f64) -> Mat4 {
    let mut out = *a;
    for row in out.iter_mut() {
        for x in row.iter_mut() {
            *x *= s;
        }
    }
    out
}

fn mat4_max_abs_diff(a: &Mat4, b: &Mat4) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            m = m.max((a[i][j] - b[i][j]).abs());
        }
    }
    m
}

/// Solve `A X = B` for 4×4 matrices by Gaussian elimination with partial
/// pivoting. `A` here is always a Padé denominator, far from singular.
fn mat4_solve(a: &Mat4, b: &Mat4) -> Result<Mat4> {
    let mut m = *a;
    let mut rhs = *b;
    for col in 0..4 {
        let mut piv = col;
        for r in col + 1..4 {
            if m[r][col].abs() > m[piv][col].abs() {
                piv = r;
            }
        }
        if m[piv][col].abs() < 1e-300 {
            return Err(Error::NumericIntegrity(
                "singular system in matrix exponential".into(),
            ));
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        let d = m[col][col];
        for j in 0..4 {
            m[col][j] /= d;
            rhs[col][j] /= d;
        }
        for r in 0..4 {
            if r != col {
                let f = m[r][col];
                if f != 0.0 {
                    for j in 0..4 {
                        m[r][j] -= f * m[col][j];
                        rhs[r][j] -= f * rhs[col][j];
                    }
                }
            }
        }
    }
    Ok(rhs)
}

/// Expansion of a Hermitian 2×2 operator in {I, σx, σy, σz}/√2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliVector {
    pub coeffs: [f64; 4],
}

impl PauliVector {
    pub fn new(coeffs: [f64; 4]) -> Self {
        PauliVector { coeffs }
    }

    /// |0⟩⟨0| = (I + σz)/2.
    pub fn rho_zero() -> Self {
        PauliVector::new([SQRT2_INV, 0.0, 0.0, SQRT2_INV])
    }

    /// POVM element |0⟩⟨0|.
    pub fn effect_zero() -> Self {
        PauliVector::rho_zero()
    }

    /// POVM element |1⟩⟨1| = (I − σz)/2.
    pub fn effect_one() -> Self {
        PauliVector::new([SQRT2_INV, 0.0, 0.0, -SQRT2_INV])
    }

    pub fn bloch_norm(&self) -> f64 {
        (self.coeffs[1].powi(2) + self.coeffs[2].powi(2) + self.coeffs[3].powi(2)).sqrt()
    }

    /// Density-matrix invariant: unit trace and Bloch norm inside the ball.
    pub fn is_density(&self, tol: f64) -> bool {
        (self.coeffs[0] - SQRT2_INV).abs() <= tol && self.bloch_norm() <= SQRT2_INV + tol
    }

    pub fn dot(&self, other: &PauliVector) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Generator of a one-parameter channel semigroup; first row is all zeros so
/// the generated semigroup preserves trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorPtm {
    pub matrix: Mat4,
}

impl GeneratorPtm {
    pub fn zero() -> Self {
        GeneratorPtm { matrix: MAT4_ZERO }
    }

    pub fn add(&self, other: &GeneratorPtm) -> GeneratorPtm {
        GeneratorPtm {
            matrix: mat4_add(&self.matrix, &other.matrix),
        }
    }

    pub fn first_row_is_zero(&self) -> bool {
        self.matrix[0].iter().all(|&x| x == 0.0)
    }
}

/// A quantum channel as a 4×4 real matrix acting on [`PauliVector`] coeffs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelPtm {
    pub matrix: Mat4,
}

impl ChannelPtm {
    pub fn identity() -> Self {
        ChannelPtm { matrix: MAT4_ID }
    }

    pub fn apply(&self, v: &PauliVector) -> PauliVector {
        PauliVector::new(mat4_vec(&self.matrix, &v.coeffs))
    }

    /// The 3×3 block acting on the Bloch part.
    pub fn bloch_block(&self) -> [[f64; 3]; 3] {
        let mut b = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                b[i][j] = self.matrix[i + 1][j + 1];
            }
        }
        b
    }

    /// Max deviation of the Bloch block from orthogonality (BᵀB = I).
    pub fn bloch_orthogonality_defect(&self) -> f64 {
        let b = self.bloch_block();
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let mut dot = 0.0;
                for k in 0..3 {
                    dot += b[k][i] * b[k][j];
                }
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    pub fn bloch_det(&self) -> f64 {
        let b = self.bloch_block();
        b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
            - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
            + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0])
    }

    pub fn symmetry_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.matrix[i][j] - self.matrix[j][i]).abs());
            }
        }
        worst
    }
}

/// PTM generator of ρ ↦ −i[cx σx + cy σy + cz σz, ρ].
pub fn ham_generator(cx: f64, cy: f64, cz: f64) -> Result<GeneratorPtm> {
    ensure_finite("hamiltonian coefficients", &[cx, cy, cz])?;
    let mut m = MAT4_ZERO;
    m[1][2] = -2.0 * cz;
    m[2][1] = 2.0 * cz;
    m[1][3] = 2.0 * cy;
    m[3][1] = -2.0 * cy;
    m[2][3] = -2.0 * cx;
    m[3][2] = 2.0 * cx;
    Ok(GeneratorPtm { matrix: m })
}

fn sym3_eigenvalues(h: &[[f64; 3]; 3]) -> Result<[f64; 3]> {
    let mut a = Array2::<f64>::zeros((3, 3));
    for i in 0..3 {
        for j in 0..3 {
            a[[i, j]] = h[i][j];
        }
    }
    let (vals, _) = a
        .eigh(ndarray_linalg::UPLO::Upper)
        .map_err(|e| Error::NumericIntegrity(format!("3x3 eigendecomposition failed: {e}")))?;
    Ok([vals[0], vals[1], vals[2]])
}

/// PTM generator of the Lindblad dissipator with Pauli jump operators,
/// 𝒮[ρ] = Σ_{jk} h_jk (σj ρ σk − ½{σk σj, ρ}).
///
/// For real symmetric `h` the Bloch block reduces to 2(h − tr(h)·I); the
/// unit tests check this against a direct 2×2 computation.
pub fn lindblad_dissipator(h: &[[f64; 3]; 3]) -> Result<GeneratorPtm> {
    let flat: Vec<f64> = h.iter().flatten().copied().collect();
    ensure_finite("dissipator coefficient matrix", &flat)?;
    for i in 0..3 {
        for j in 0..3 {
            if (h[i][j] - h[j][i]).abs() > 1e-10 {
                return Err(invalid("dissipator coefficient matrix must be symmetric"));
            }
        }
    }
    let eigs = sym3_eigenvalues(h)?;
    if eigs.iter().any(|&l| l < -1e-10) {
        return Err(invalid(
            "dissipator coefficient matrix must be positive semidefinite",
        ));
    }
    let tr = h[0][0] + h[1][1] + h[2][2];
    let mut m = MAT4_ZERO;
    for i in 0..3 {
        for j in 0..3 {
            m[i + 1][j + 1] = 2.0 * (h[i][j] - if i == j { tr } else { 0.0 });
        }
    }
    Ok(GeneratorPtm { matrix: m })
}

/// Matrix exponential of a generator, by scaling-and-squaring with the
/// order-13 Padé approximant. If the generator's first row is exactly zero
/// the trace-preservation row of the result is set exactly.
pub fn channel_exp(g: &GeneratorPtm) -> Result<ChannelPtm> {
    let flat: Vec<f64> = g.matrix.iter().flatten().copied().collect();
    ensure_finite("generator matrix", &flat)?;

    // 1-norm for the scaling decision.
    let mut norm1: f64 = 0.0;
    for j in 0..4 {
        let col: f64 = (0..4).map(|i| g.matrix[i][j].abs()).sum();
        norm1 = norm1.max(col);
    }
    const THETA13: f64 = 5.371_920_351_148_152;
    let s = if norm1 > THETA13 {
        (norm1 / THETA13).log2().ceil() as i32
    } else {
        0
    };
    let a = mat4_scale(&g.matrix, 0.5f64.powi(s));

    const B: [f64; 14] = [
        64_764_752_532_480_000.0,
        32_382_376_266_240_000.0,
        7_771_770_303_897_600.0,
        1_187_353_796_428_800.0,
        129_060_195_264_000.0,
        10_559_470_521_600.0,
        670_442_572_800.0,
        33_522_128_640.0,
        1_323_241_920.0,
        40_840_800.0,
        960_960.0,
        16_380.0,
        182.0,
        1.0,
    ];
    let a2 = mat4_mul(&a, &a);
    let a4 = mat4_mul(&a2, &a2);
    let a6 = mat4_mul(&a2, &a4);

    // U = A (A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    let mut w1 = mat4_add(
        &mat4_scale(&a6, B[13]),
        &mat4_add(&mat4_scale(&a4, B[11]), &mat4_scale(&a2, B[9])),
    );
    w1 = mat4_mul(&a6, &w1);
    let w2 = mat4_add(
        &mat4_add(&mat4_scale(&a6, B[7]), &mat4_scale(&a4, B[5])),
        &mat4_add(&mat4_scale(&a2, B[3]), &mat4_scale(&MAT4_ID, B[1])),
    );
    let u = mat4_mul(&a, &mat4_add(&w1, &w2));

    // V = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let mut z1 = mat4_add(
        &mat4_scale(&a6, B[12]),
        &mat4_add(&mat4_scale(&a4, B[10]), &mat4_scale(&a2, B[8])),
    );
    z1 = mat4_mul(&a6, &z1);
    let v = mat4_add(
        &z1,
        &mat4_add(
            &mat4_add(&mat4_scale(&a6, B[6]), &mat4_scale(&a4, B[4])),
            &mat4_add(&mat4_scale(&a2, B[2]), &mat4_scale(&MAT4_ID, B[0])),
        ),
    );

    // exp(A) ≈ (V − U)⁻¹ (V + U), then undo the scaling by repeated squaring.
    let num = mat4_add(&v, &u);
    let den = mat4_add(&v, &mat4_scale(&u, -1.0));
    let mut e = mat4_solve(&den, &num)?;
    for _ in 0..s {
        e = mat4_mul(&e, &e);
    }

    if g.first_row_is_zero() {
        e[0] = [1.0, 0.0, 0.0, 0.0];
    }
    Ok(ChannelPtm { matrix: e })
}

/// Compose a circuit's channels; `chain[0]` is applied first.
pub fn compose(chain: &[ChannelPtm]) -> Result<ChannelPtm> {
    let first = chain
        .first()
        .ok_or_else(|| invalid("compose requires a non-empty chain"))?;
    let mut acc = first.matrix;
    for c in &chain[1..] {
        acc = mat4_mul(&c.matrix, &acc);
    }
    Ok(ChannelPtm { matrix: acc })
}

/// Probability of the measurement effect after sending `state` through
/// `channel`. Clamped to [0, 1] only inside the numeric tolerance band;
/// larger violations indicate a simulation bug and are reported as errors.
pub fn outcome_probability(
    state: &PauliVector,
    channel: &ChannelPtm,
    effect: &PauliVector,
) -> Result<f64> {
    let p = effect.dot(&channel.apply(state));
    if !(-PROB_CLAMP_TOL..=1.0 + PROB_CLAMP_TOL).contains(&p) {
        return Err(Error::NumericIntegrity(format!(
            "outcome probability {p} outside [0,1] beyond tolerance"
        )));
    }
    Ok(p.clamp(0.0, 1.0))
}

#[derive(Debug, Clone, Copy)]
pub struct CptpDiagnostic {
    pub is_tp: bool,
    pub min_choi_eigenvalue: f64,
}

impl CptpDiagnostic {
    pub fn is_cptp(&self) -> bool {
        self.is_tp && self.min_choi_eigenvalue >= CP_EIG_TOL
    }
}

// Normalized Pauli basis as complex 2×2 matrices, entries (re, im).
type C2 = [[(f64, f64); 2]; 2];

pub(crate) const PAULI_BASIS: [C2; 4] = {
    let z = (0.0, 0.0);
    let h = (SQRT2_INV, 0.0);
    let nh = (-SQRT2_INV, 0.0);
    let ih = (0.0, SQRT2_INV);
    let nih = (0.0, -SQRT2_INV);
    [
        [[h, z], [z, h]],    // I/√2
        [[z, h], [h, z]],    // σx/√2
        [[z, nih], [ih, z]], // σy/√2
        [[h, z], [z, nh]],   // σz/√2
    ]
};

/// Choi matrix of the channel as an 8×8 real-symmetric embedding
/// [[Re J, −Im J], [Im J, Re J]]; its spectrum is the Choi spectrum with
/// doubled multiplicity. J = ½ Σ_{ik} M_ik B_i ⊗ B_kᵀ, normalized tr J = 1.
fn choi_embedding(c: &ChannelPtm) -> Array2<f64> {
    let mut re = [[0.0f64; 4]; 4];
    let mut im = [[0.0f64; 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            let w = 0.5 * c.matrix[i][k];
            if w == 0.0 {
                continue;
            }
            for a in 0..2 {
                for b in 0..2 {
                    for cc in 0..2 {
                        for d in 0..2 {
                            // (B_i ⊗ B_kᵀ)[(a,b),(c,d)] = B_i[a][c] · B_k[d][b]
                            let (xr, xi) = PAULI_BASIS[i][a][cc];
                            let (yr, yi) = PAULI_BASIS[k][d][b];
                            re[2 * a + b][2 * cc + d] += w * (xr * yr - xi * yi);
                            im[2 * a + b][2 * cc + d] += w * (xr * yi + xi * yr);
                        }
                    }
                }
            }
        }
    }
    let mut e = Array2::<f64>::zeros((8, 8));
    for i in 0..4 {
        for j in 0..4 {
            e[[i, j]] = re[i][j];
            e[[i + 4, j + 4]] = re[i][j];
            e[[i, j + 4]] = -im[i][j];
            e[[i + 4, j]] = im[i][j];
        }
    }
    e
}

/// Trace preservation plus the minimum Choi eigenvalue.
pub fn cptp_check(c: &ChannelPtm) -> CptpDiagnostic {
    let row = &c.matrix[0];
    let is_tp = (row[0] - 1.0).abs() <= TP_TOL
        && row[1].abs() <= TP_TOL
        && row[2].abs() <= TP_TOL
        && row[3].abs() <= TP_TOL;
    let emb = choi_embedding(c);
    let min_eig = emb
        .eigh(ndarray_linalg::UPLO::Upper)
        .map(|(vals, _)| vals[0])
        .unwrap_or(f64::NEG_INFINITY);
    CptpDiagnostic {
        is_tp,
        min_choi_eigenvalue: min_eig,
    }
}
