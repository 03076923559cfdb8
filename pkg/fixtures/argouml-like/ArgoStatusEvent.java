package org.argouml.application.events;

public class ArgoStatusEvent extends ArgoEvent {

    private String text;

    public ArgoStatusEvent(Object source, String text) {
        super(source);
        this.text = text;
    }

    public int getEventStartRange() {
        return 100;
    }

    public String getText() {
        return this.text;
    }
}
