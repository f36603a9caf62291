use super::expr::{Expr, Word};

fn word_text(e: &Expr, w: &Word) -> String {
    let alg = e.algebra();
    w.letters().iter().map(|g| alg.generator_name(*g)).collect::<Vec<_>>().join("*")
}

pub(crate) fn expr(e: &Expr) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let many = e.len() > 1;
    let mut out = String::new();
    for (k, (w, c)) in e.terms().enumerate() {
        let (neg, text) = match c.term_text() {
            Some((neg, t)) => {
                if w.is_empty() {
                    (neg, t)
                } else if t == "1" {
                    (neg, word_text(e, w))
                } else {
                    (neg, format!("{t}*{}", word_text(e, w)))
                }
            }
            None => {
                let ct = c.render();
                if w.is_empty() {
                    (false, if many { format!("({ct})") } else { ct })
                } else {
                    (false, format!("({ct})*{}", word_text(e, w)))
                }
            }
        };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&text);
    }
    out
}
