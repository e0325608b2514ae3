//! Text rendering of words, polynomials, signatures and module elements.

use freesig_core::{Coefficient, ModuleElement, ModuleMonomial, Polynomial, Word};

/// `x^2*y*x`; the empty word renders as `1`.
pub fn format_word(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let name = &names[l as usize];
        parts.push(if j - i > 1 { format!("{name}^{}", j - i) } else { name.clone() });
        i = j;
    }
    parts.join("*")
}

/// Terms in descending order, e.g. `x*y*x - x*y` or `-1/2*y^2 + 3`.
pub fn format_poly(p: &Polynomial, names: &[String]) -> String {
    format_terms(p.iter().map(|(w, c)| (c, (!w.is_empty()).then(|| format_word(w, names)))))
}

/// `a*e_i*b` with a 1-based index and empty words left out.
pub fn format_sig(m: &ModuleMonomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    if !m.left.is_empty() {
        parts.push(format_word(&m.left, names));
    }
    parts.push(format!("e_{}", m.index + 1));
    if !m.right.is_empty() {
        parts.push(format_word(&m.right, names));
    }
    parts.join("*")
}

pub fn format_module_element(e: &ModuleElement, names: &[String]) -> String {
    format_terms(e.iter().map(|(m, c)| (c, Some(format_sig(m, names)))))
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a Coefficient, Option<String>)>) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match body {
            None => out.push_str(&abs.to_string()),
            Some(b) if abs.is_one() => out.push_str(&b),
            Some(b) => {
                out.push_str(&abs.to_string());
                out.push('*');
                out.push_str(&b);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
