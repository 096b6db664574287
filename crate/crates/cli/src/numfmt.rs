use num_complex::Complex;
use vonkoch::render::fmt_fixed;

/// `re ± im·i` with `digits` significant digits relative to `|z|`, so rounding
/// noise in a near-zero component prints as zero.
pub fn format_complex(z: Complex<f64>, digits: usize) -> String {
    let magnitude = z.norm();
    if magnitude == 0.0 || !magnitude.is_finite() {
        return format!("{} + {}i", fmt_fixed(z.re, 1), fmt_fixed(z.im, 1));
    }
    let exponent = magnitude.log10().floor() as i64;
    let decimals = (digits as i64 - 1 - exponent).clamp(0, 17) as usize;
    let re = fmt_fixed(z.re, decimals);
    let im = fmt_fixed(z.im, decimals);
    match im.strip_prefix('-') {
        Some(abs) => format!("{re} - {abs}i"),
        None => format!("{re} + {im}i"),
    }
}
