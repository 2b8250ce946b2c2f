/** Stats panels as HTML/SVG strings: similarity matrix, subset ranking,
 * interaction diagram. Pure string builders so they stay unit-testable. */

import type { Stats, VidSection } from "./types.js";

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function siMatrixHtml(stats: Stats): string {
  const { labels, matrix } = stats.si;
  const head = labels.map((l) => `<th>${esc(l)}</th>`).join("");
  const body = matrix
    .map((row, i) => {
      const cells = row
        .map((v) => {
          const shade = Math.round(255 - 140 * Math.min(1, v));
          return `<td style="background: rgb(${shade},${shade},255)">${v.toFixed(2)}</td>`;
        })
        .join("");
      return `<tr><th>${esc(labels[i])}</th>${cells}</tr>`;
    })
    .join("");
  return `<table class="si"><thead><tr><th></th>${head}</tr></thead><tbody>${body}</tbody></table>`;
}

export function rankingHtml(stats: Stats): string {
  const { directions, entries } = stats.ranking;
  const head =
    `<tr><th>Variables</th><th>#</th><th>SI</th>` +
    `<th>CDI(${esc(directions.cdi_12)})</th><th>CDI(${esc(directions.cdi_21)})</th>` +
    `<th>CDR</th><th>Bound</th></tr>`;
  const body = entries
    .map((e) => {
      const si = e.si === null ? "NA" : e.si < 0.04 ? "-" : e.si.toFixed(2);
      return (
        `<tr><td>${esc(e.variables.join("/"))}</td><td>${e.arity}</td>` +
        `<td>${si}</td><td>${e.cdi_12.toFixed(2)}</td><td>${e.cdi_21.toFixed(2)}</td>` +
        `<td>${e.cdr.toFixed(2)}</td><td>${e.bound.toFixed(3)}</td></tr>`
      );
    })
    .join("");
  return `<table class="ranking"><thead>${head}</thead><tbody>${body}</tbody></table>`;
}

const EDGE_STYLE: Record<string, string> = {
  strong: 'stroke="#1a1a1a" stroke-width="2.4"',
  medium: 'stroke="#555" stroke-width="0.8"',
  weak: 'stroke="#1a1a1a" stroke-width="1.2" stroke-dasharray="5 4"',
};

export function vidSvg(vid: VidSection, radius = 100): string {
  const pad = 42;
  const size = 2 * (radius + pad);
  const cx = radius + pad;
  const cy = radius + pad;
  const pos = new Map<string, [number, number]>();
  for (const node of vid.nodes) {
    pos.set(node.name, [
      cx + radius * Math.cos(node.angle),
      cy - radius * Math.sin(node.angle),
    ]);
  }
  if (vid.center !== null) pos.set(vid.center, [cx, cy]);

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}">`,
    `<circle cx="${cx}" cy="${cy}" r="${radius}" fill="none" stroke="#ccc" stroke-width="0.6"/>`,
  ];
  for (const e of vid.edges) {
    const a = pos.get(e.a);
    const b = pos.get(e.b);
    if (!a || !b) continue;
    parts.push(
      `<line x1="${a[0].toFixed(2)}" y1="${a[1].toFixed(2)}" ` +
        `x2="${b[0].toFixed(2)}" y2="${b[1].toFixed(2)}" ${EDGE_STYLE[e.band]}>` +
        `<title>${esc(e.a)}-${esc(e.b)} SI=${e.si.toFixed(3)}</title></line>`,
    );
  }
  for (const node of vid.nodes) {
    const [x, y] = pos.get(node.name)!;
    const lx = cx + (radius + 13) * Math.cos(node.angle);
    const ly = cy - (radius + 13) * Math.sin(node.angle);
    const anchor =
      Math.cos(node.angle) >= 0.05 ? "start" : Math.cos(node.angle) <= -0.05 ? "end" : "middle";
    parts.push(`<circle cx="${x.toFixed(2)}" cy="${y.toFixed(2)}" r="3.5" fill="#20639b"/>`);
    parts.push(
      `<text x="${lx.toFixed(2)}" y="${ly.toFixed(2)}" font-size="9" ` +
        `font-family="sans-serif" text-anchor="${anchor}" dominant-baseline="middle">` +
        `${esc(node.name)}</text>`,
    );
  }
  if (vid.center !== null) {
    parts.push(`<circle cx="${cx}" cy="${cy}" r="4.5" fill="#b02e2e"/>`);
    parts.push(
      `<text x="${cx}" y="${cy + 14}" font-size="9" font-family="sans-serif" ` +
        `text-anchor="middle" dominant-baseline="middle">${esc(vid.center)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}

export function statsPanelsHtml(stats: Stats): string {
  return (
    `<section><h3>Subset ranking</h3>${rankingHtml(stats)}</section>` +
    `<section><h3>Similarity matrix</h3>${siMatrixHtml(stats)}</section>` +
    `<section><h3>Interaction diagram</h3>${vidSvg(stats.vid)}</section>`
  );
}
