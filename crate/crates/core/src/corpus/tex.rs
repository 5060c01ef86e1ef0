//! Removal of TeX markup from abstract-style text.
//!
//! This is a small scanner rather than a TeX parser. It handles what shows up
//! in titles and abstracts: `%` comments, inline and display math, control
//! words and symbols, math environments and grouping braces. Malformed input
//! never fails; an unterminated math span is dropped up to the end of its
//! line.

/// Environments whose whole body is math and is dropped.
const MATH_ENVIRONMENTS: &[&str] = &[
    "equation",
    "equation*",
    "align",
    "align*",
    "eqnarray",
    "eqnarray*",
    "displaymath",
    "math",
    "gather",
    "gather*",
    "multline",
    "multline*",
];

/// Commands whose first brace argument is a key, a path or a length rather
/// than running text.
const DROP_ARGUMENT: &[&str] = &[
    "cite",
    "citep",
    "citet",
    "nocite",
    "ref",
    "eqref",
    "pageref",
    "label",
    "url",
    "href",
    "includegraphics",
    "bibliography",
    "bibliographystyle",
    "bibitem",
    "usepackage",
    "documentclass",
    "input",
    "include",
    "hspace",
    "vspace",
];

/// Strips TeX commands, math and comments from `text`.
///
/// Brace-delimited arguments of formatting commands keep their text, so
/// `\emph{gauge} theory` becomes `gauge theory`.
pub fn strip_tex(text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::with_capacity(text.len());
    let mut i = 0;

    while i < chars.len() {
        match chars[i] {
            '%' => i = end_of_line(&chars, i),
            '$' => i = skip_dollar_math(&chars, i),
            '{' | '}' => i += 1,
            '~' => {
                out.push(' ');
                i += 1;
            }
            '\\' => i = control_sequence(&chars, i, &mut out),
            c => {
                out.push(c);
                i += 1;
            }
        }
    }

    out
}

/// Index of the newline ending the line that contains `i` (or the end).
fn end_of_line(chars: &[char], i: usize) -> usize {
    chars[i..]
        .iter()
        .position(|&c| c == '\n')
        .map_or(chars.len(), |p| i + p)
}

fn skip_dollar_math(chars: &[char], start: usize) -> usize {
    let display = chars.get(start + 1) == Some(&'$');
    let body = if display { start + 2 } else { start + 1 };

    let mut i = body;
    while i < chars.len() {
        match chars[i] {
            '\\' => i += 2,
            '$' if display => {
                if chars.get(i + 1) == Some(&'$') {
                    return i + 2;
                }
                i += 1;
            }
            '$' => return i + 1,
            // Inline math cannot cross a paragraph break.
            '\n' if !display && chars.get(i + 1) == Some(&'\n') => break,
            _ => i += 1,
        }
    }

    end_of_line(chars, start)
}

/// Skips to just past `close` (a two-character delimiter such as `\)`), or
/// to the end of the line when it never appears.
fn skip_until(chars: &[char], start: usize, close: [char; 2]) -> usize {
    let mut i = start;
    while i + 1 < chars.len() {
        if chars[i] == close[0] && chars[i + 1] == close[1] {
            return i + 2;
        }
        i += 1;
    }
    end_of_line(chars, start)
}

fn control_sequence(chars: &[char], start: usize, out: &mut String) -> usize {
    let Some(&next) = chars.get(start + 1) else {
        return start + 1;
    };

    if next.is_ascii_alphabetic() {
        let mut end = start + 1;
        while end < chars.len() && chars[end].is_ascii_alphabetic() {
            end += 1;
        }
        if chars.get(end) == Some(&'*') {
            end += 1;
        }
        let name: String = chars[start + 1..end].iter().collect();
        return control_word(chars, &name, end);
    }

    match next {
        '(' => skip_until(chars, start + 2, ['\\', ')']),
        '[' => skip_until(chars, start + 2, ['\\', ']']),
        '%' | '$' | '&' | '#' | '_' => {
            out.push(next);
            start + 2
        }
        '\\' | ',' | ';' | ':' | '!' | ' ' | '\n' | '\t' => {
            out.push(' ');
            start + 2
        }
        // Accents and other control symbols vanish; the letter they
        // decorate is kept.
        _ => start + 2,
    }
}

fn control_word(chars: &[char], name: &str, after: usize) -> usize {
    match name {
        "begin" => {
            let (env, end) = brace_group(chars, after);
            match env {
                Some(env) if MATH_ENVIRONMENTS.contains(&env.as_str()) => {
                    skip_environment(chars, end, &env)
                }
                _ => end,
            }
        }
        "end" => brace_group(chars, after).1,
        _ if DROP_ARGUMENT.contains(&name) => {
            let mut i = skip_spaces(chars, after);
            while chars.get(i) == Some(&'[') {
                i = chars[i..]
                    .iter()
                    .position(|&c| c == ']')
                    .map_or(chars.len(), |p| i + p + 1);
                i = skip_spaces(chars, i);
            }
            brace_group(chars, i).1
        }
        _ => after,
    }
}

fn skip_spaces(chars: &[char], mut i: usize) -> usize {
    while i < chars.len() && (chars[i] == ' ' || chars[i] == '\t') {
        i += 1;
    }
    i
}

/// Reads a balanced `{...}` group starting at `i` (after optional spaces).
/// Returns its inner text and the index after the closing brace. Without a
/// group at `i`, returns `None` and `i` unchanged.
fn brace_group(chars: &[char], i: usize) -> (Option<String>, usize) {
    let open = skip_spaces(chars, i);
    if chars.get(open) != Some(&'{') {
        return (None, i);
    }
    let mut depth = 0usize;
    let mut j = open;
    while j < chars.len() {
        match chars[j] {
            '\\' => j += 1,
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    let inner = chars[open + 1..j].iter().collect();
                    return (Some(inner), j + 1);
                }
            }
            _ => {}
        }
        j += 1;
    }
    // Unbalanced: drop the rest of the line.
    (None, end_of_line(chars, open))
}

fn skip_environment(chars: &[char], body: usize, env: &str) -> usize {
    let close: Vec<char> = format!("\\end{{{env}}}").chars().collect();
    chars[body..]
        .windows(close.len())
        .position(|w| w == close.as_slice())
        .map_or_else(|| end_of_line(chars, body), |p| body + p + close.len())
}

#[cfg(test)]
mod tests {
    use super::strip_tex;

    #[test]
    fn plain_text_is_unchanged() {
        assert_eq!(strip_tex("gauge theory"), "gauge theory");
    }

    #[test]
    fn formatting_command_keeps_argument() {
        assert_eq!(strip_tex("\\emph{gauge} theory"), "gauge theory");
        assert_eq!(strip_tex("\\textit{vice versa}"), "vice versa");
    }

    #[test]
    fn math_and_comment_are_removed() {
        assert_eq!(strip_tex("mass $m^2$ term % note"), "mass  term ");
    }

    #[test]
    fn display_math_variants() {
        assert_eq!(strip_tex("a $$x = y$$ b"), "a  b");
        assert_eq!(strip_tex("a \\[x\\] b"), "a  b");
        assert_eq!(strip_tex("a \\(x\\) b"), "a  b");
        assert_eq!(
            strip_tex("a \\begin{equation} E = mc^2 \\end{equation} b"),
            "a  b"
        );
    }

    #[test]
    fn escaped_dollar_inside_math_does_not_close() {
        assert_eq!(strip_tex("x $a \\$ b$ y"), "x  y");
    }

    #[test]
    fn unbalanced_math_drops_to_end_of_line() {
        assert_eq!(strip_tex("left $x + y\nnext line"), "left \nnext line");
        assert_eq!(strip_tex("left $$x\nmore"), "left \nmore");
    }

    #[test]
    fn comment_keeps_newline() {
        assert_eq!(strip_tex("one % two\nthree"), "one \nthree");
    }

    #[test]
    fn escaped_percent_is_text() {
        assert_eq!(strip_tex("50\\% of"), "50% of");
    }

    #[test]
    fn reference_arguments_are_dropped() {
        assert_eq!(strip_tex("shown in \\cite{MCCD13}."), "shown in .");
        assert_eq!(strip_tex("see \\cite[p.~3]{abc} now"), "see  now");
        assert_eq!(strip_tex("Fig.~\\ref{fig:sim}"), "Fig. ");
    }

    #[test]
    fn accents_keep_base_letter() {
        assert_eq!(strip_tex("G\\\"odel"), "Godel");
        assert_eq!(strip_tex("d\\'{e}j\\`a"), "deja");
    }

    #[test]
    fn line_break_and_tie_become_spaces() {
        assert_eq!(strip_tex("a\\\\b~c"), "a b c");
    }

    #[test]
    fn trailing_backslash() {
        assert_eq!(strip_tex("end\\"), "end");
    }

    #[test]
    fn starred_and_unknown_commands() {
        assert_eq!(strip_tex("\\section*{Intro} text"), "Intro text");
        assert_eq!(strip_tex("the \\LaTeX{} way"), "the  way");
    }
}
