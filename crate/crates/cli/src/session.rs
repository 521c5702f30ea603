//! On-disk store: one text file per automaton.
//!
//! ```text
//! <store>/predicates/<name>.txt   multi-track DFA, positional tracks
//! <store>/words/<name>.txt        DFAO
//! <store>/matrices/<name>.txt     linear representation
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use zeckauto::automata::{load_dfa, load_dfao, save_dfa, save_dfao, Dfao};
use zeckauto::linrep::LinearRepresentation;
use zeckauto::logic::{Predicate, PredicateStore};
use zeckauto::{Error, Result};

const PREDICATES: &str = "predicates";
const WORDS: &str = "words";
const MATRICES: &str = "matrices";

pub struct Session {
    root: PathBuf,
    pub store: PredicateStore,
}

fn check_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(Error::Syntax {
            pos: 0,
            message: format!("invalid automaton name `{name}`"),
        })
    }
}

fn entries(dir: &Path) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    if !dir.is_dir() {
        return Ok(out);
    }
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("txt") {
            continue;
        }
        let Some(name) = path.file_stem().and_then(|s| s.to_str()) else {
            continue;
        };
        out.push((name.to_string(), fs::read_to_string(&path)?));
    }
    out.sort();
    Ok(out)
}

/// Prefixes a file's parse error with its path.
fn in_file<T>(r: Result<T>, path: &Path) -> Result<T> {
    r.map_err(|e| match e {
        Error::Format { line, message } => Error::Format {
            line,
            message: format!("{}: {message}", path.display()),
        },
        e => e,
    })
}

impl Session {
    /// Opens (without creating) the store at `root`; missing directories mean an empty
    /// store holding only the built-in words.
    pub fn open(root: &Path, cap: usize) -> Result<Self> {
        let mut store = PredicateStore::with_builtins();
        store.set_cap(cap);
        for (name, text) in entries(&root.join(PREDICATES))? {
            let path = root.join(PREDICATES).join(format!("{name}.txt"));
            let a = in_file(load_dfa(&text), &path)?.minimize();
            store.insert_predicate(&name, Predicate::from_positional(a)?, true)?;
        }
        for (name, text) in entries(&root.join(WORDS))? {
            let path = root.join(WORDS).join(format!("{name}.txt"));
            store.insert_word(&name, in_file(load_dfao(&text), &path)?, true)?;
        }
        Ok(Session {
            root: root.to_path_buf(),
            store,
        })
    }

    fn write(&self, kind: &str, name: &str, text: &str) -> Result<PathBuf> {
        check_name(name)?;
        let dir = self.root.join(kind);
        fs::create_dir_all(&dir)?;
        let path = dir.join(format!("{name}.txt"));
        fs::write(&path, text)?;
        Ok(path)
    }

    pub fn persist_predicate(&self, name: &str) -> Result<PathBuf> {
        let p = self.store.predicate(name)?;
        self.write(PREDICATES, name, &save_dfa(&p.automaton))
    }

    pub fn persist_word(&self, name: &str) -> Result<PathBuf> {
        let m = self.store.word(name)?;
        self.write(WORDS, name, &save_dfao(m))
    }

    pub fn persist_matrix(&self, name: &str, lr: &LinearRepresentation) -> Result<PathBuf> {
        self.write(MATRICES, name, &lr.to_text())
    }

    pub fn add_word(&mut self, name: &str, m: Dfao, overwrite: bool) -> Result<PathBuf> {
        check_name(name)?;
        self.store.insert_word(name, m, overwrite)?;
        self.persist_word(name)
    }

    pub fn add_predicate(&mut self, name: &str, p: Predicate, overwrite: bool) -> Result<PathBuf> {
        check_name(name)?;
        self.store.insert_predicate(name, p, overwrite)?;
        self.persist_predicate(name)
    }

    pub fn check_name(name: &str) -> Result<()> {
        check_name(name)
    }
}
