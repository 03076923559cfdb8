package net.n3.nanoxml;

public class StdXMLBuilder {

    private Object root;

    public Object getResult() {
        return this.root;
    }
}
