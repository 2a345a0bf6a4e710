/// Renders `v` with `digits` significant digits, locale-independently:
/// fixed notation for decimal exponents in `[-5, digits)`, scientific
/// otherwise. Zero of either sign is written `0`.
pub fn format_significant(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let exp: i32 = sci
        .split_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("scientific formatting has an exponent");
    if (-5..digits as i32).contains(&exp) {
        format!("{:.*}", (digits as i32 - 1 - exp) as usize, v)
    } else {
        sci
    }
}

#[cfg(test)]
mod tests {
    use super::format_significant as f;

    #[test]
    fn fixed_and_scientific() {
        assert_eq!(f(0.191411, 9), "0.191411000");
        assert_eq!(f(0.00998647, 6), "0.00998647");
        assert_eq!(f(1.0, 9), "1.00000000");
        assert_eq!(f(-2.5, 3), "-2.50");
        assert_eq!(f(123456789.4, 9), "123456789");
        assert_eq!(f(1.5e10, 3), "1.50e10");
        assert_eq!(f(1.5e-7, 2), "1.5e-7");
        assert_eq!(f(-0.0, 9), "0");
        assert_eq!(f(9.9999999999, 9), "10.0000000");
    }
}
