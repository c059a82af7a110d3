//! Closure sessions: a serialized closure plus the log of operations that
//! produced it. Mutating commands hold an exclusive lock on the file.

use crate::io::{CliError, CliResult};
use fieldtower::arith::BaseField;
use fieldtower::closure::{Closure, ClosureState};
use fieldtower::tower::{Tower, TowerDescriptor};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fs::{File, OpenOptions};
use std::io::{Read, Seek, SeekFrom, Write};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum LogEntry {
    Init {
        tower: TowerDescriptor,
    },
    Adjoin {
        poly: String,
        result: String,
    },
    Roots {
        poly: String,
        result: Vec<RootEntry>,
    },
    PkRoot {
        element: String,
        k: u32,
        result: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub root: String,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Session {
    pub closure: ClosureState,
    pub log: Vec<LogEntry>,
}

impl Session {
    pub fn new(tower: Tower) -> Session {
        let closure = Closure::from_tower(tower.clone());
        Session {
            closure: closure.state(),
            log: vec![LogEntry::Init {
                tower: tower.descriptor(),
            }],
        }
    }

    pub fn over(base: BaseField) -> Session {
        Session::new(Tower::new(base))
    }

    pub fn closure(&self) -> CliResult<Closure> {
        Ok(Closure::from_state(&self.closure)?)
    }

    /// Canonical text: sorted keys, one trailing newline.
    pub fn to_text(&self) -> String {
        let v = serde_json::to_value(self).expect("sessions serialize");
        let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
        s.push('\n');
        s
    }

    pub fn from_text(text: &str, path: &str) -> CliResult<Session> {
        serde_json::from_str(text).map_err(|e| CliError::usage(format!("invalid session file {path}: {e}")))
    }

    /// Runs one operation on the closure, logging it, and returns the
    /// logged entry.
    pub fn apply(&mut self, closure: &mut Closure, op: Op<'_>) -> CliResult<LogEntry> {
        let entry = run_op(closure, op)?;
        self.closure = closure.state();
        self.log.push(entry.clone());
        Ok(entry)
    }

    /// Rebuilds the session from its log alone.
    pub fn replay(&self) -> CliResult<Session> {
        let mut entries = self.log.iter();
        let tower = match entries.next() {
            Some(LogEntry::Init { tower }) => Tower::from_descriptor(tower)?,
            _ => return Err(CliError::usage("session log must start with an init entry")),
        };
        let mut fresh = Session::new(tower);
        let mut closure = fresh.closure()?;
        for e in entries {
            let op = match e {
                LogEntry::Init { .. } => return Err(CliError::usage("init may only appear first in a session log")),
                LogEntry::Adjoin { poly, .. } => Op::Adjoin(poly),
                LogEntry::Roots { poly, .. } => Op::Roots(poly),
                LogEntry::PkRoot { element, k, .. } => Op::PkRoot(element, *k),
            };
            fresh.apply(&mut closure, op)?;
        }
        Ok(fresh)
    }
}

pub enum Op<'a> {
    Adjoin(&'a str),
    Roots(&'a str),
    PkRoot(&'a str, u32),
}

fn run_op(closure: &mut Closure, op: Op<'_>) -> CliResult<LogEntry> {
    Ok(match op {
        Op::Adjoin(p) => {
            let f = closure.parse_poly(p)?;
            let r = closure.adjoin_root(&f)?;
            LogEntry::Adjoin {
                poly: closure.tower().format_poly(&f),
                result: closure.tower().format_element(&r),
            }
        }
        Op::Roots(p) => {
            let f = closure.parse_poly(p)?;
            let roots = closure.roots(&f)?;
            let t = closure.tower();
            LogEntry::Roots {
                poly: t.format_poly(&f),
                result: roots
                    .iter()
                    .map(|(r, m)| RootEntry {
                        root: t.format_element(r),
                        mult: *m,
                    })
                    .collect(),
            }
        }
        Op::PkRoot(a, k) => {
            let x = closure.parse_element(a)?;
            let r = closure.pk_root(&x, k)?;
            LogEntry::PkRoot {
                element: closure.tower().format_element(&x),
                k,
                result: closure.tower().format_element(&r),
            }
        }
    })
}

/// A session file opened under an exclusive lock, released on drop.
pub struct LockedSession {
    file: File,
    path: String,
    pub session: Session,
}

impl LockedSession {
    pub fn open(path: &str) -> CliResult<LockedSession> {
        let mut file = OpenOptions::new()
            .read(true)
            .write(true)
            .open(path)
            .map_err(|e| CliError::usage(format!("cannot open session {path}: {e}")))?;
        file.lock()
            .map_err(|e| CliError::usage(format!("cannot lock session {path}: {e}")))?;
        let mut text = String::new();
        file.read_to_string(&mut text)
            .map_err(|e| CliError::usage(format!("cannot read session {path}: {e}")))?;
        let session = Session::from_text(&text, path)?;
        Ok(LockedSession {
            file,
            path: path.to_string(),
            session,
        })
    }

    pub fn create(path: &str, session: Session) -> CliResult<LockedSession> {
        let file = OpenOptions::new()
            .read(true)
            .write(true)
            .create(true)
            .truncate(false)
            .open(path)
            .map_err(|e| CliError::usage(format!("cannot create session {path}: {e}")))?;
        file.lock()
            .map_err(|e| CliError::usage(format!("cannot lock session {path}: {e}")))?;
        Ok(LockedSession {
            file,
            path: path.to_string(),
            session,
        })
    }

    pub fn save(&mut self) -> CliResult<()> {
        let text = self.session.to_text();
        let err = |e: std::io::Error| CliError::usage(format!("cannot write session {}: {e}", self.path));
        self.file.set_len(0).map_err(err)?;
        self.file.seek(SeekFrom::Start(0)).map_err(err)?;
        self.file.write_all(text.as_bytes()).map_err(err)?;
        self.file.sync_all().map_err(err)
    }
}

/// Reads a session without locking it for writing.
pub fn read(path: &str) -> CliResult<Session> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read session {path}: {e}")))?;
    Session::from_text(&text, path)
}

pub fn entry_json(e: &LogEntry) -> Value {
    serde_json::to_value(e).expect("log entries serialize")
}
