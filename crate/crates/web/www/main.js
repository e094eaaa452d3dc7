import init, { check_prefix, triple_grid, longest } from "./pkg/pseudoperiodic_web.js";

const $ = (id) => document.getElementById(id);

function showError(el, e) {
  el.textContent = String(e.message ?? e);
  el.classList.add("error");
}

function renderWord(el, word, highlight) {
  el.replaceChildren();
  const marks = new Map(highlight.map((p, j) => [p, j === 0 ? "at" : "hit"]));
  for (let i = 0; i < word.length; i++) {
    const s = document.createElement("span");
    s.textContent = word[i];
    if (marks.has(i)) s.className = marks.get(i);
    el.append(s);
  }
}

function onCheck(ev) {
  ev.preventDefault();
  const f = new FormData(ev.target);
  const label = $("check-label");
  label.classList.remove("error");
  try {
    const r = check_prefix(f.get("seq"), Number(f.get("len")), f.get("tuple"));
    label.textContent = r.label;
    renderWord($("check-word"), r.word, Array.from(r.highlight));
    r.free();
  } catch (e) {
    showError(label, e);
    $("check-word").replaceChildren();
  }
}

function onGrid(ev) {
  ev.preventDefault();
  const f = new FormData(ev.target);
  const a = Number(f.get("a"));
  const size = Number(f.get("size"));
  const cells = triple_grid(a, size);
  const canvas = $("grid-canvas");
  const ctx = canvas.getContext("2d");
  const px = canvas.width / size;
  const colors = ["#fff", "#333", "#f08a24"];
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let accepted = 0;
  for (let b = 0; b < size; b++) {
    for (let c = 0; c < size; c++) {
      const v = cells[b * size + c];
      if (v) accepted++;
      ctx.fillStyle = colors[v];
      ctx.fillRect(c * px, b * px, px, px);
    }
  }
  $("grid-label").textContent = `${accepted} accepted triples (${a}, b, c) with c < ${size}`;
}

function onLongest(ev) {
  ev.preventDefault();
  const f = new FormData(ev.target);
  const label = $("longest-label");
  label.classList.remove("error");
  try {
    const r = longest(f.get("pp"), f.get("exp"), Number(f.get("k")));
    label.textContent = `${r.summary} (${r.nodes} nodes)`;
    $("longest-word").textContent = r.witness;
    r.free();
  } catch (e) {
    showError(label, e);
    $("longest-word").textContent = "";
  }
}

await init();
$("check").addEventListener("submit", onCheck);
$("grid").addEventListener("submit", onGrid);
$("longest").addEventListener("submit", onLongest);
for (const id of ["check", "grid", "longest"]) $(id).requestSubmit();
