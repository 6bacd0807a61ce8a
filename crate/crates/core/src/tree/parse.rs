//! Nested-parenthesis tree text: `node ::= "(" node{0,2} ")"`, whitespace
//! ignored, children in the order written.

use super::{OrderedTree, TreeBuilder};
use crate::error::{Error, Result};

struct Open {
    offset: usize,
    id: usize,
    children: usize,
}

pub(super) fn parse_tree(text: &str) -> Result<OrderedTree> {
    let mut builder: Option<TreeBuilder> = None;
    let mut stack: Vec<Open> = Vec::new();
    let mut closed = false;

    for (offset, byte) in text.bytes().enumerate() {
        match byte {
            b if b.is_ascii_whitespace() => {}
            _ if closed => {
                return Err(Error::Parse {
                    offset,
                    message: "trailing input after the root node".into(),
                })
            }
            b'(' => {
                let id = match (builder.as_mut(), stack.last_mut()) {
                    (None, _) => {
                        let (b, root) = TreeBuilder::with_root();
                        builder = Some(b);
                        root
                    }
                    (Some(b), Some(parent)) => {
                        parent.children += 1;
                        if parent.children > 2 {
                            return Err(Error::Degree {
                                offset: parent.offset,
                                count: count_children(text, parent.offset),
                            });
                        }
                        b.add_child(parent.id)
                    }
                    (Some(_), None) => unreachable!("closed is set once the root closes"),
                };
                stack.push(Open {
                    offset,
                    id,
                    children: 0,
                });
            }
            b')' => {
                if stack.pop().is_none() {
                    return Err(Error::Parse {
                        offset,
                        message: "unmatched ')'".into(),
                    });
                }
                closed = stack.is_empty();
            }
            other => {
                return Err(Error::Parse {
                    offset,
                    message: format!("unexpected character {:?}", char::from(other)),
                })
            }
        }
    }

    if let Some(open) = stack.last() {
        return Err(Error::Parse {
            offset: open.offset,
            message: "unclosed '('".into(),
        });
    }
    builder.map(TreeBuilder::finish).ok_or(Error::Parse {
        offset: text.len(),
        message: "empty input, expected '('".into(),
    })
}

/// Counts the direct children of the node opened at `open`, for error messages.
/// Stops at the first structural problem; the count is informational only.
fn count_children(text: &str, open: usize) -> usize {
    let mut depth = 0usize;
    let mut count = 0;
    for byte in text.bytes().skip(open) {
        match byte {
            b'(' => {
                depth += 1;
                if depth == 2 {
                    count += 1;
                }
            }
            b')' => {
                depth -= 1;
                if depth == 0 {
                    break;
                }
            }
            _ => {}
        }
    }
    count
}
