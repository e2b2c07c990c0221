//! Identifier rules shared by every structure and by the text format.

/// Characters that carry meaning in the text format and so cannot appear in
/// a cell, object or morphism name.
const RESERVED: &[char] = &['.', '=', '>', '#', ':'];

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

/// Name of the identity morphism on `object` in every category built by this crate.
pub fn identity_name(object: &str) -> String {
    format!("id_{object}")
}

pub(crate) fn check_names<'a>(what: &str, names: impl IntoIterator<Item = &'a String>, issues: &mut Vec<String>) {
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !is_valid_name(name) {
            issues.push(format!("invalid {what} name `{name}`"));
        }
        if !seen.insert(name.as_str()) {
            issues.push(format!("duplicate {what} `{name}`"));
        }
    }
}
