//! Turning raw title+abstract records into token streams and a vocabulary.

mod stopwords;
mod tex;
mod tokenize;
mod vocab;

use std::collections::HashSet;
use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};

pub use stopwords::StopWordList;
pub use tex::strip_tex;
pub use tokenize::{is_punctuation, normalize_tokenize};
pub use vocab::{term_frequency_list, Vocabulary};

/// One corpus record: an identifier and the title plus abstract text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawDocument {
    pub id: String,
    pub text: String,
}

impl RawDocument {
    pub fn new(id: impl Into<String>, text: impl Into<String>) -> Self {
        RawDocument {
            id: id.into(),
            text: text.into(),
        }
    }

    /// TeX stripping followed by normalization.
    pub fn tokens(&self) -> Vec<String> {
        normalize_tokenize(&strip_tex(&self.text))
    }
}

/// Token sequences, one per document, in corpus order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TokenizedCorpus {
    documents: Vec<Vec<String>>,
    total_tokens: u64,
}

impl TokenizedCorpus {
    pub fn new(documents: Vec<Vec<String>>) -> Self {
        let total_tokens = documents.iter().map(|d| d.len() as u64).sum();
        TokenizedCorpus {
            documents,
            total_tokens,
        }
    }

    /// Tokenizes every document, preserving order.
    pub fn from_raw(docs: &[RawDocument]) -> Self {
        Self::new(docs.iter().map(RawDocument::tokens).collect())
    }

    pub fn documents(&self) -> &[Vec<String>] {
        &self.documents
    }

    pub fn num_documents(&self) -> usize {
        self.documents.len()
    }

    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    /// Writes one document per line, tokens joined by single spaces.
    pub fn write<W: Write>(&self, mut writer: W) -> Result<()> {
        for doc in &self.documents {
            writeln!(writer, "{}", doc.join(" "))?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let documents = reader
            .lines()
            .map(|line| Ok(line?.split_whitespace().map(str::to_owned).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(documents))
    }
}

/// Reads `id<TAB>text` records, one per line. Blank lines are skipped.
pub fn read_tsv_documents<R: BufRead>(reader: R) -> Result<Vec<RawDocument>> {
    let mut docs = Vec::new();
    let mut seen = HashSet::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let (id, text) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(lineno + 1, "expected id<TAB>text"))?;
        if !seen.insert(id.to_owned()) {
            return Err(Error::DuplicateDocument(id.to_owned()));
        }
        docs.push(RawDocument::new(id, text));
    }
    Ok(docs)
}

/// Reads every regular file in `dir` (sorted by name) as one document.
///
/// Files ending in `.abs` are treated as arXiv abstract records and reduced
/// to their title and abstract; anything else is taken verbatim.
pub fn read_dir_documents(dir: &Path) -> Result<Vec<RawDocument>> {
    let mut paths = Vec::new();
    collect_files(dir, &mut paths)?;
    paths.sort();

    let mut docs = Vec::with_capacity(paths.len());
    for path in paths {
        let id = path
            .strip_prefix(dir)
            .unwrap_or(&path)
            .to_string_lossy()
            .into_owned();
        docs.push(read_file_document(&path, id)?);
    }

    if docs.is_empty() {
        return Err(Error::NoDocuments(dir.to_owned()));
    }
    Ok(docs)
}

fn read_file_document(path: &Path, id: String) -> Result<RawDocument> {
    let bytes = fs::read(path).map_err(|source| Error::Path {
        path: path.to_owned(),
        source,
    })?;
    let text = String::from_utf8_lossy(&bytes);
    let text = if path.extension().is_some_and(|e| e == "abs") {
        arxiv_title_abstract(&text)
    } else {
        text.into_owned()
    };
    Ok(RawDocument::new(id, text))
}

fn collect_files(dir: &Path, out: &mut Vec<std::path::PathBuf>) -> Result<()> {
    let entries = fs::read_dir(dir).map_err(|source| Error::Path {
        path: dir.to_owned(),
        source,
    })?;
    for entry in entries {
        let path = entry?.path();
        let name = path.file_name().map(|n| n.to_string_lossy().into_owned());
        if name.is_some_and(|n| n.starts_with('.')) {
            continue;
        }
        if path.is_dir() {
            collect_files(&path, out)?;
        } else if path.is_file() {
            out.push(path);
        }
    }
    Ok(())
}

/// Loads a corpus from a directory of documents, an `id<TAB>text` file
/// (extension `.tsv`), or any other single file taken as one document.
pub fn load_documents(path: &Path) -> Result<Vec<RawDocument>> {
    if path.is_dir() {
        return read_dir_documents(path);
    }
    let docs = if path.extension().is_some_and(|e| e == "tsv") {
        let file = fs::File::open(path).map_err(|source| Error::Path {
            path: path.to_owned(),
            source,
        })?;
        read_tsv_documents(std::io::BufReader::new(file))?
    } else {
        let id = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        let doc = read_file_document(path, id)?;
        if doc.text.trim().is_empty() {
            Vec::new()
        } else {
            vec![doc]
        }
    };
    if docs.is_empty() {
        return Err(Error::NoDocuments(path.to_owned()));
    }
    Ok(docs)
}

/// Extracts "title\nabstract" from an arXiv `.abs` record.
///
/// The record layout is a header block (with a `Title:` field that may wrap
/// onto indented continuation lines) followed by the abstract, the two
/// delimited by lines consisting of `\\`. Text that does not follow this
/// layout is returned unchanged.
pub fn arxiv_title_abstract(record: &str) -> String {
    let sections: Vec<Vec<&str>> = record
        .lines()
        .collect::<Vec<_>>()
        .split(|l| l.trim() == "\\\\")
        .map(<[&str]>::to_vec)
        .collect();
    if sections.len() < 3 {
        return record.to_owned();
    }

    let header = &sections[1];
    let mut title = String::new();
    let mut in_title = false;
    for line in header {
        if let Some(rest) = line.strip_prefix("Title:") {
            title.push_str(rest.trim());
            in_title = true;
        } else if in_title && line.starts_with(char::is_whitespace) {
            title.push(' ');
            title.push_str(line.trim());
        } else {
            in_title = false;
        }
    }

    let abstract_text = sections[2].join("\n");
    format!("{}\n{}", title, abstract_text.trim())
}
