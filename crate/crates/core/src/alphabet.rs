//! Display names for generators.

use crate::error::{Error, Result};

/// Maps generator indices (1-based) to names. Indices without a registered
/// name render as `x<i>`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    /// `x1, ..., xk`.
    pub fn indexed(k: usize) -> Self {
        Self { names: (1..=k).map(|i| format!("x{i}")).collect() }
    }

    pub fn from_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
                return Err(Error::Syntax { pos: 0, msg: format!("invalid generator name '{n}'") });
            }
            if names[..i].contains(n) {
                return Err(Error::Syntax { pos: 0, msg: format!("duplicate generator name '{n}'") });
            }
        }
        Ok(Self { names })
    }

    /// Registers names in natural order: alphabetic prefix first, then the
    /// numeric suffix as a number, so `x2 < x10` and `x < y`.
    pub fn sorted<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = names.into_iter().map(Into::into).collect();
        v.sort_by_key(|n| natural_key(n));
        v.dedup();
        Self::from_names(v)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: u32) -> String {
        match self.names.get(index as usize - 1) {
            Some(n) => n.clone(),
            None => format!("x{index}"),
        }
    }

    pub fn lookup(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32 + 1)
    }

    /// Longest registered name that prefixes `text`.
    pub(crate) fn longest_prefix(&self, text: &str) -> Option<(u32, usize)> {
        self.names
            .iter()
            .enumerate()
            .filter(|(_, n)| text.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len())
            .map(|(i, n)| (i as u32 + 1, n.len()))
    }
}

fn natural_key(name: &str) -> (String, u64, String) {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (prefix, digits) = name.split_at(split);
    (prefix.to_string(), digits.parse().unwrap_or(0), digits.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_order() {
        let a = Alphabet::sorted(["x10", "x2", "y", "x"]).unwrap();
        assert_eq!(a.names(), &["x", "x2", "x10", "y"]);
        assert_eq!(a.lookup("y"), Some(4));
        assert_eq!(a.name(7), "x7");
    }

    #[test]
    fn prefix_lookup() {
        let a = Alphabet::from_names(["e1", "e12", "f"]).unwrap();
        assert_eq!(a.longest_prefix("e12f"), Some((2, 3)));
        assert_eq!(a.longest_prefix("g"), None);
        assert!(Alphabet::from_names(["a", "a"]).is_err());
    }
}
