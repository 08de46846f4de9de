//! Small helpers shared by the textual parsers.

/// Removes one pair of parentheses when it encloses the whole string.
pub(crate) fn strip_outer_parens(s: &str) -> &str {
    let s = s.trim();
    if !(s.starts_with('(') && s.ends_with(')')) {
        return s;
    }
    let mut depth = 0i32;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && idx + 1 < s.len() {
                    return s;
                }
            }
            _ => {}
        }
    }
    s[1..s.len() - 1].trim()
}

/// Splits on `sep` occurrences outside parentheses.
pub(crate) fn split_top_level<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let bytes = s.as_bytes();
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut idx = 0;
    while idx < bytes.len() {
        match bytes[idx] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s[idx..].starts_with(sep) {
            parts.push(&s[start..idx]);
            idx += sep.len();
            start = idx;
            continue;
        }
        idx += 1;
    }
    parts.push(&s[start..]);
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parens() {
        assert_eq!(strip_outer_parens("(1 + c)"), "1 + c");
        assert_eq!(strip_outer_parens("(1+i)*c"), "(1+i)*c");
        assert_eq!(strip_outer_parens("(a) + (b)"), "(a) + (b)");
    }

    #[test]
    fn splitting() {
        assert_eq!(
            split_top_level("(1 + c) * q + 2", " + "),
            vec!["(1 + c) * q", "2"]
        );
        assert_eq!(split_top_level("3", " + "), vec!["3"]);
    }
}
