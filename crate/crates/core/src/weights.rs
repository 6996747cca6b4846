//! Coefficient families for Grünwald-type discretizations: the plain
//! Grünwald sequence g_k, the shifted/weighted combinations w_k built from a
//! triple (d_{-1}, d_0, d_1), and the interpolation blends varpi_{k,q} that
//! couple two grids of ratio m.

use crate::{Error, Result};

/// Fractional derivative order alpha, restricted to the operating range
/// (1, 2); alpha = 2 is admitted for degenerate checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 1.0 && alpha <= 2.0 {
            Ok(FractionalOrder(alpha))
        } else {
            Err(Error::InvalidParameter(format!(
                "alpha = {alpha} outside (1, 2]"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Assembly coefficients (d_{-1}, d_0, d_1) of a weighted-shifted scheme and
/// its formal order l in {1, 2}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeParams {
    pub d_minus1: f64,
    pub d0: f64,
    pub d1: f64,
    pub order: u8,
}

impl SchemeParams {
    pub fn new(d_minus1: f64, d0: f64, d1: f64, order: u8) -> Result<Self> {
        if order == 1 || order == 2 {
            Ok(SchemeParams { d_minus1, d0, d1, order })
        } else {
            Err(Error::InvalidParameter(format!("scheme order {order} not in {{1,2}}")))
        }
    }
}

/// The three named scheme presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeKind {
    /// Shifted Grünwald, (0, 0, 1), first order.
    G11,
    /// (0, 1 - alpha/2, alpha/2), second order.
    W21,
    /// ((2 - alpha)/4, 0, (2 + alpha)/4), second order.
    W22,
}

impl SchemeKind {
    pub fn params(self, alpha: f64) -> SchemeParams {
        match self {
            SchemeKind::G11 => SchemeParams { d_minus1: 0.0, d0: 0.0, d1: 1.0, order: 1 },
            SchemeKind::W21 => SchemeParams {
                d_minus1: 0.0,
                d0: 1.0 - alpha / 2.0,
                d1: alpha / 2.0,
                order: 2,
            },
            SchemeKind::W22 => SchemeParams {
                d_minus1: (2.0 - alpha) / 4.0,
                d0: 0.0,
                d1: (2.0 + alpha) / 4.0,
                order: 2,
            },
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SchemeKind::G11 => "11",
            SchemeKind::W21 => "21",
            SchemeKind::W22 => "22",
        }
    }

    pub fn from_label(s: &str) -> Result<Self> {
        match s {
            "11" | "g" => Ok(SchemeKind::G11),
            "21" => Ok(SchemeKind::W21),
            "22" => Ok(SchemeKind::W22),
            _ => Err(Error::InvalidParameter(format!("unknown scheme label {s:?}"))),
        }
    }
}

/// Grünwald coefficients g_0..g_n of the generating function (1 - z)^alpha,
/// by the recursion g_0 = 1, g_k = (1 - (alpha+1)/k) g_{k-1}.
///
/// Total in alpha and n; the recursion avoids the gamma-ratio overflow at
/// large k (the closed form is kept as a test oracle only).
pub fn grunwald_coeffs(alpha: f64, n: usize) -> Vec<f64> {
    let mut g = Vec::with_capacity(n + 1);
    g.push(1.0);
    for k in 1..=n {
        let prev = g[k - 1];
        g.push((1.0 - (alpha + 1.0) / k as f64) * prev);
    }
    g
}

/// Weighted-shifted coefficients w_0..w_n for a scheme triple:
/// w_0 = d_1 g_0, w_1 = d_0 g_0 + d_1 g_1, w_k = d_{-1} g_{k-2} + d_0 g_{k-1} + d_1 g_k.
pub fn shifted_weights(scheme: &SchemeParams, alpha: f64, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "shifted_weights needs n >= 2 (first two entries are special), got {n}"
        )));
    }
    let g = grunwald_coeffs(alpha, n);
    let mut w = Vec::with_capacity(n + 1);
    w.push(scheme.d1 * g[0]);
    w.push(scheme.d0 * g[0] + scheme.d1 * g[1]);
    for k in 2..=n {
        w.push(scheme.d_minus1 * g[k - 2] + scheme.d0 * g[k - 1] + scheme.d1 * g[k]);
    }
    Ok(w)
}

/// Interpolation blend varpi_{k,q} = (1 - q/m) w_{k-1} + (q/m) w_k, with
/// varpi_{0,q} = (q/m) w_0. Returns entries k = 0..w.len()-1.
pub fn interp_weights(w: &[f64], q: usize, m: usize) -> Result<Vec<f64>> {
    if m < 1 {
        return Err(Error::InvalidParameter("interp_weights needs m >= 1".into()));
    }
    if q > m {
        return Err(Error::InvalidParameter(format!("offset q = {q} outside [0, {m}]")));
    }
    let lam = q as f64 / m as f64;
    let mut vp = Vec::with_capacity(w.len());
    vp.push(lam * w[0]);
    for k in 1..w.len() {
        vp.push((1.0 - lam) * w[k - 1] + lam * w[k]);
    }
    Ok(vp)
}

/// Precomputed coefficient table for one (scheme, alpha, n, m): the raw g_k,
/// the scheme weights w_k, and the blends varpi_{k,q} stored row-wise per q
/// to match row assembly.
#[derive(Debug, Clone)]
pub struct WeightTable {
    pub g: Vec<f64>,
    pub w: Vec<f64>,
    /// varpi[q][k], q = 0..m.
    pub varpi: Vec<Vec<f64>>,
}

impl WeightTable {
    pub fn new(scheme: &SchemeParams, alpha: f64, n: usize, m: usize) -> Result<Self> {
        let g = grunwald_coeffs(alpha, n);
        let w = shifted_weights(scheme, alpha, n)?;
        let varpi = (0..=m).map(|q| interp_weights(&w, q, m)).collect::<Result<Vec<_>>>()?;
        Ok(WeightTable { g, w, varpi })
    }
}
