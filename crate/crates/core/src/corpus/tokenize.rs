/// Lowercases `text` and splits it into word and symbol tokens.
///
/// Runs of alphanumeric characters form words. Every other non-whitespace
/// character (punctuation, hyphens, brackets, math symbols) becomes a token
/// of its own, so `(gauge) model.` yields `( gauge ) model .`.
pub fn normalize_tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut word = String::new();

    for c in text.chars() {
        if c.is_whitespace() {
            flush(&mut word, &mut tokens);
            continue;
        }
        // Lowercasing may expand a character (e.g. into a letter plus a
        // combining mark), so classify the lowercased pieces.
        for lc in c.to_lowercase() {
            if lc.is_alphanumeric() {
                word.push(lc);
            } else {
                flush(&mut word, &mut tokens);
                tokens.push(lc.to_string());
            }
        }
    }
    flush(&mut word, &mut tokens);

    tokens
}

fn flush(word: &mut String, tokens: &mut Vec<String>) {
    if !word.is_empty() {
        tokens.push(std::mem::take(word));
    }
}

/// True for single-character tokens that are not letters or digits.
pub fn is_punctuation(token: &str) -> bool {
    let mut chars = token.chars();
    matches!((chars.next(), chars.next()), (Some(c), None) if !c.is_alphanumeric())
}
