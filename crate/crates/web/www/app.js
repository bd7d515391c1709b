import init, { check, classify, census } from "./pkg/cantab_web.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("error");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("error");
    out.textContent = String(e.message ?? e);
  }
}

function grid(rows) {
  return rows.map((r) => "  " + r).join("\n");
}

function checkText(r) {
  const lines = [
    grid(r.rows),
    `cantorian: ${r.cantorian ? "yes" : "no"}, bi-cantorian: ${r.bicantorian ? "yes" : "no"}`,
  ];
  if (r.witness) {
    lines.push(`witness: ${r.witness.from} word ${r.witness.word}, rows ${r.witness.rows.join(" ")}`);
  }
  if (r.permanent) {
    lines.push(`permanent (${r.permanent.length} words): ${r.permanent.join(" ")}`);
  }
  return lines.join("\n");
}

function classifyText(r) {
  return [
    "minimal reduced form:",
    grid(r.representative),
    `invariant ${r.invariant}`,
    `eta ${r.eta}, theta ${r.theta}`,
    `orbits ${r.orbit_phi} x ${r.orbit_psi}`,
    `class size ${r.cardinality}`,
  ].join("\n");
}

function censusText(r) {
  const lines = [`${r.classes} classes from ${r.tested} candidates`, `total ${r.total} = ${r.factored}`];
  for (const c of r.per_class) {
    lines.push(`${c.representative.join("/")}  ${c.cardinality}`);
  }
  return lines.join("\n");
}

function bind(form, out, f) {
  $(form).addEventListener("submit", (ev) => {
    ev.preventDefault();
    show($(out), f);
  });
}

await init();
bind("check-form", "check-out", () => checkText(JSON.parse(check($("check-rows").value, +$("check-s").value))));
bind("classify-form", "classify-out", () =>
  classifyText(JSON.parse(classify($("classify-rows").value, +$("classify-s").value))));
bind("census-form", "census-out", () => censusText(JSON.parse(census(+$("census-n").value, +$("census-s").value))));
