//! Resolution of the FORM argument: literal text, literal JSON, a file
//! path, or `-` for standard input.

use std::io::Read;
use std::path::Path;

use waring::{parse_form, Error, Form};

/// Fetches the raw content behind a form argument: `-` reads standard
/// input, an existing file path is read, anything else is taken literally.
pub fn fetch(arg: &str) -> std::io::Result<String> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg)
    } else {
        Ok(arg.to_string())
    }
}

/// Parses one form. Content whose first non-space byte is `{` is treated
/// as the JSON format (which carries its own arity and degree); anything
/// else goes through the text grammar with the expected arity.
///
/// The expected degree is always enforced. The arity is enforced unless
/// `any_nvars` is set (the catalecticant accepts quartics in any number of
/// variables, so there `--vars` only governs text input).
pub fn parse(content: &str, nvars: u8, degree: usize, any_nvars: bool) -> waring::Result<Form> {
    let trimmed = content.trim();
    if trimmed.starts_with('{') {
        let f = Form::from_json(trimmed)?;
        if !any_nvars && f.nvars() != nvars {
            return Err(Error::Shape(format!(
                "expected a form in {nvars} variables, input has {}",
                f.nvars()
            )));
        }
        if f.degree() != degree {
            return Err(Error::Shape(format!(
                "expected a form of degree {degree}, input has degree {}",
                f.degree()
            )));
        }
        Ok(f)
    } else {
        parse_form(trimmed, nvars, degree)
    }
}
