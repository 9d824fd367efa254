//! Adaptive Gauss-Kronrod integration used as the reference oracle and for
//! the error-kernel integrals.
//!
//! A 7/15-point Kronrod pair gives the per-interval estimate; intervals that
//! miss their share of the tolerance are bisected, down to a minimum width.
//! Evaluation order is fixed (depth-first, left child first), so results are
//! bit-reproducible regardless of how callers schedule work.

use crate::{Error, Result};

/// Abscissae of the 15-point Kronrod rule on [-1, 1], positive half.
/// Odd indices are the embedded 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// 7-point Gauss weights for the nodes at odd `XGK` indices.
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_DEPTH: u32 = 48;

/// Value and achieved absolute-error estimate of a numeric integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
}

/// QUADPACK's error rescaling: sharpen the raw `|K - G|` difference using the
/// deviation statistic, floored near machine precision.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One 15-point Kronrod evaluation over `[a, b]`.
fn qk15<F>(f: &F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    // fv[0..7] are nodes left of center (descending distance), fv[7] the
    // center, fv[8..15] the mirrored right-side nodes.
    let mut fv = [0.0f64; 15];
    for (i, &x) in XGK.iter().enumerate() {
        let dx = half * x;
        let lo = f(center - dx)?;
        let hi = if i == 7 { lo } else { f(center + dx)? };
        fv[i] = lo;
        fv[14 - i] = hi;
    }

    let fc = fv[7];
    let mut resg = WG[3] * fc;
    let mut resk = WGK[7] * fc;
    let mut resabs = WGK[7] * fc.abs();
    for i in 0..7 {
        let fsum = fv[i] + fv[14 - i];
        resk += WGK[i] * fsum;
        resabs += WGK[i] * (fv[i].abs() + fv[14 - i].abs());
        if i % 2 == 1 {
            resg += WG[i / 2] * fsum;
        }
    }
    let mean = resk * 0.5;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for i in 0..7 {
        resasc += WGK[i] * ((fv[i] - mean).abs() + (fv[14 - i] - mean).abs());
    }

    let err = ((resk - resg) * half).abs();
    let abs_half = half.abs();
    Ok((
        resk * half,
        rescale_error(err, resabs * abs_half, resasc * abs_half),
    ))
}

fn adaptive<F>(f: &F, a: f64, b: f64, tol: f64, min_width: f64, depth: u32) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    let (value, err) = qk15(f, a, b)?;
    if err <= tol || (b - a) <= min_width || depth >= MAX_DEPTH {
        return Ok(QuadResult {
            value,
            abs_error: err,
        });
    }
    let mid = 0.5 * (a + b);
    let left = adaptive(f, a, mid, 0.5 * tol, min_width, depth + 1)?;
    let right = adaptive(f, mid, b, 0.5 * tol, min_width, depth + 1)?;
    Ok(QuadResult {
        value: left.value + right.value,
        abs_error: left.abs_error + right.abs_error,
    })
}

/// Adaptively integrate `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Returns the estimate together with the achieved error bound; fails if the
/// integrand returns a non-finite value or if bisection bottomed out at the
/// minimum interval width while still above tolerance.
pub fn integrate<F>(f: &F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(tol > 0.0) {
        return Err(Error::Tolerance {
            requested: tol,
            achieved: f64::NAN,
        });
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            abs_error: 0.0,
        });
    }
    if a > b {
        let flipped = integrate(f, b, a, tol)?;
        return Ok(QuadResult {
            value: -flipped.value,
            abs_error: flipped.abs_error,
        });
    }
    let min_width = (b - a) * f64::EPSILON * 64.0;
    let checked = |x: f64| -> Result<f64> {
        let y = f(x)?;
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFinite {
                what: "integrand".into(),
                x,
            })
        }
    };
    let result = adaptive(&checked, a, b, tol, min_width, 0)?;
    if result.abs_error > tol {
        return Err(Error::Tolerance {
            requested: tol,
            achieved: result.abs_error,
        });
    }
    Ok(result)
}

/// Integrate with forced split points (declared kinks). Each segment gets a
/// share of the tolerance proportional to its width; segment results are
/// summed left to right.
pub fn integrate_split<F>(f: &F, a: f64, b: f64, splits: &[f64], tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if a > b {
        let flipped = integrate_split(f, b, a, splits, tol)?;
        return Ok(QuadResult {
            value: -flipped.value,
            abs_error: flipped.abs_error,
        });
    }
    let mut points = vec![a];
    points.extend(splits.iter().copied().filter(|&s| s > a && s < b));
    points.sort_by(|x, y| x.partial_cmp(y).unwrap());
    points.push(b);

    let total = b - a;
    let mut value = 0.0;
    let mut abs_error = 0.0;
    for pair in points.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        if lo == hi {
            continue;
        }
        let share = if total > 0.0 {
            tol * ((hi - lo) / total).max(f64::EPSILON)
        } else {
            tol
        };
        let seg = integrate(f, lo, hi, share)?;
        value += seg.value;
        abs_error += seg.abs_error;
    }
    Ok(QuadResult { value, abs_error })
}
